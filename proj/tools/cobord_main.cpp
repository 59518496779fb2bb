#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cobord/cache.hpp"
#include "cobord/verify.hpp"

using namespace cobord;

namespace {

// Exit codes: 0 success, 1 parse/input/IO, 2 verification failure,
// 3 truncation or window exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;
constexpr int kExitTrunc = 3;

struct GlobalArgs {
  int truncation = 10;
  int window = -1;
  std::string cachePath;
  std::string format = "text";
};

Model load_model(const GlobalArgs &g) {
  ModelParams params;
  params.N = g.truncation;
  params.K = g.window;
  if (!g.cachePath.empty()) {
    std::ifstream probe(g.cachePath);
    if (probe.good()) {
      FglContext ctx = cache_load(g.cachePath);
      if (ctx.N == params.nctx())
        return Model::build_from(params, std::move(ctx));
      // wrong truncation: fall through and rebuild the missing range
    }
  }
  Model m = Model::build(params);
  if (!g.cachePath.empty())
    cache_save(m.fgl(), g.cachePath);
  return m;
}

void print_suite(const SuiteReport &rep, const std::string &format) {
  for (const auto &line : rep.lines) {
    if (format == "records") {
      std::cout << "suite=" << rep.suite << " check=\"" << line.name
                << "\" pass=" << (line.pass ? 1 : 0);
      if (!line.detail.empty())
        std::cout << " detail=\"" << line.detail << "\"";
      std::cout << "\n";
    } else {
      std::cout << (line.pass ? "PASS" : "FAIL") << "  [" << rep.suite
                << "] " << line.name;
      if (!line.detail.empty())
        std::cout << " -- " << line.detail;
      std::cout << "\n";
    }
  }
}

int run_table(const GlobalArgs &g, const std::string &ring, int maxDegree,
              int sigmaWeight) {
  Model m = load_model(g);
  if (maxDegree > m.N())
    throw TruncationExceeded("table: max degree beyond truncation " +
                             std::to_string(m.N()));
  bool records = g.format == "records";
  if (ring == "omega") {
    for (int n = 0; n <= maxDegree; ++n) {
      int d = m.omega().dim(n);
      if (records)
        std::cout << "ring=omega degree=" << n << " dim=" << d << "\n";
      else
        std::cout << n << "\t" << d << "\n";
    }
  } else if (ring == "phi") {
    // free polynomial ring over the coefficients on d0, d1, ...
    auto dt = std::make_shared<VarTable>();
    for (int i = 0; i + 1 <= maxDegree; ++i)
      dt->add("d" + std::to_string(i), i + 1);
    for (int n = 0; n <= maxDegree; ++n) {
      int total = 0;
      for (int delta = 0; delta <= n; ++delta)
        total += static_cast<int>(monomials_of_degree(*dt, delta).size()) *
                 m.omega().dim(n - delta);
      if (records)
        std::cout << "ring=phi degree=" << n << " dim=" << total << "\n";
      else
        std::cout << n << "\t" << total << "\n";
    }
  } else if (ring == "c2") {
    for (int n = 0; n <= maxDegree; ++n) {
      int pres = dim_presented(m, n);
      int img = dim_image(m, n);
      if (records)
        std::cout << "ring=c2 degree=" << n << " presented=" << pres
                  << " image=" << img << " match=" << (pres == img ? 1 : 0)
                  << "\n";
      else
        std::cout << n << "\t" << pres << "\t" << img << "\t"
                  << (pres == img ? "match" : "MISMATCH") << "\n";
    }
  } else if (ring == "ext") {
    int s = sigmaWeight;
    if (s < 0)
      throw EvalError("table ext: sigma weight must be >= 0");
    for (int tdeg = 0; tdeg <= maxDegree; ++tdeg) {
      // split normal form: s coefficient slots plus the a^s part
      int dim = 0;
      for (int j = 0; j < s; ++j) {
        int ldeg = tdeg - (s - j);
        if (ldeg >= 0)
          dim += m.omega().dim(ldeg);
      }
      dim += dim_image(m, tdeg);
      if (records)
        std::cout << "ring=ext sigma=" << s << " degree=" << tdeg
                  << " dim=" << dim << "\n";
      else
        std::cout << tdeg << "\t" << dim << "\n";
    }
  } else {
    throw EvalError("unknown ring '" + ring + "'");
  }
  return kExitOk;
}

int run_eval(const GlobalArgs &g, const std::string &exprText,
             const std::string &show, int seriesK) {
  Model m = load_model(g);
  ClassExprPtr ast = parse_expr(exprText);
  EvalValue v = eval_expr(m, *ast);
  bool records = g.format == "records";
  auto emit = [&](const std::string &key, const std::string &value) {
    if (records)
      std::cout << "expr=\"" << exprText << "\" " << key << "=\"" << value
                << "\"\n";
    else
      std::cout << value << "\n";
  };

  if (show == "normal") {
    emit("normal", v.extended ? render_ext(m, v.ext) : render_eq(m, v.eq));
  } else if (show == "phi") {
    F2Poly img = v.extended ? ext_phi(m, v.ext) : geometric_fixed(m, v.eq);
    emit("phi", render(img));
  } else if (show == "restrict") {
    if (v.extended) {
      emit("restrict", render_omega_u(m, ext_restrict(m, v.ext)));
    } else {
      F2Poly r = eq_restrict(m, v.eq);
      emit("restrict", render(m.x_to_eq(m.omega().express_or_throw(r))));
    }
  } else if (show == "hfp") {
    if (v.extended)
      throw EvalError("hfp view applies to plain classes");
    emit("hfp", render_eseries(homotopy_fixed(m, v.eq, seriesK)));
  } else if (show == "gamma-series") {
    if (v.extended)
      throw EvalError("gamma-series view applies to plain classes");
    auto entries = gamma_underlying_series(m, v.eq, seriesK);
    for (size_t n = 0; n < entries.size(); ++n) {
      if (records)
        std::cout << "expr=\"" << exprText << "\" entry=" << n << " value=\""
                  << render(entries[n]) << "\"\n";
      else
        std::cout << n << "\t" << render(entries[n]) << "\n";
    }
  } else {
    throw EvalError("unknown view '" + show + "'");
  }
  return kExitOk;
}

int run_verify(const GlobalArgs &g, const std::string &suite, int maxDegree,
               int samples) {
  Model m = load_model(g);
  VerifyOptions opt;
  opt.maxDegree = maxDegree;
  if (samples > 0) {
    opt.nfSamples = samples;
    opt.gammaSamples = samples;
    opt.extSamples = samples;
  }
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = verify_all(m, opt);
  } else if (suite == "fgl") {
    reports = {verify_fgl(m, opt)};
  } else if (suite == "omega") {
    reports = {verify_omega(m, opt)};
  } else if (suite == "tate") {
    reports = {verify_tate(m, opt)};
  } else if (suite == "relations") {
    reports = {verify_relations(m, opt)};
  } else if (suite == "completeness") {
    reports = {verify_completeness(m, opt)};
  } else if (suite == "extended") {
    reports = {verify_extended(m, opt)};
  } else if (suite == "sw") {
    reports = {verify_sw(m, opt)};
  } else {
    throw EvalError("unknown suite '" + suite + "'");
  }
  bool pass = true;
  for (const auto &rep : reports) {
    print_suite(rep, g.format);
    pass = pass && rep.pass();
  }
  return pass ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact equivariant cobordism calculator"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  GlobalArgs g;
  app.add_option("--truncation", g.truncation,
                 "presentation degree (default 10)");
  app.add_option("--window", g.window, "e-window (default truncation+2)");
  app.add_option("--cache", g.cachePath, "coefficient cache file");
  app.add_option("--format", g.format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));

  auto *table = app.add_subcommand("table", "per-degree dimension tables");
  std::string ring;
  int maxDegree = -1, sigmaWeight = 0;
  table->add_option("--ring", ring, "omega|phi|c2|ext")->required();
  table->add_option("--max-degree", maxDegree, "top degree")->required();
  table->add_option("--sigma-weight", sigmaWeight, "sigma weight (ext)");

  auto *eval = app.add_subcommand("eval", "evaluate a class expression");
  std::string exprText, show = "normal";
  int seriesK = 4;
  eval->add_option("expr", exprText, "expression")->required();
  eval->add_option("--show", show,
                   "normal|phi|restrict|hfp|gamma-series");
  eval->add_option("--k", seriesK, "series window for hfp/gamma-series");

  auto *verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  int verifyMax = -1, samples = -1;
  verify->add_option("--suite", suite,
                     "fgl|omega|tate|relations|completeness|extended|sw|all");
  verify->add_option("--max-degree", verifyMax, "top degree");
  verify->add_option("--samples", samples, "randomized sample count");

  auto *csave = app.add_subcommand("cache-save", "build and save the tables");
  std::string savePath;
  csave->add_option("path", savePath, "output file")->required();

  auto *cload = app.add_subcommand("cache-load", "load and validate a cache");
  std::string loadPath;
  cload->add_option("path", loadPath, "input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (table->parsed())
      return run_table(g, ring, maxDegree, sigmaWeight);
    if (eval->parsed())
      return run_eval(g, exprText, show, seriesK);
    if (verify->parsed())
      return run_verify(g, suite, verifyMax, samples);
    if (csave->parsed()) {
      ModelParams params;
      params.N = g.truncation;
      params.K = g.window;
      Model m = Model::build(params);
      cache_save(m.fgl(), savePath);
      std::cout << "saved N=" << m.Nctx() << " to " << savePath << "\n";
      return kExitOk;
    }
    if (cload->parsed()) {
      FglContext ctx = cache_load(loadPath);
      std::cout << "loaded N=" << ctx.N << " from " << loadPath << "\n";
      return kExitOk;
    }
  } catch (const ParseError &e) {
    std::cerr << "parse error at position " << e.pos << ": " << e.what()
              << "\n";
    return kExitInput;
  } catch (const EvalError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CacheError &e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotInSubring &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TruncationExceeded &e) {
    std::cerr << "truncation exceeded: " << e.what() << "\n";
    return kExitTrunc;
  } catch (const WindowInsufficient &e) {
    std::cerr << "window insufficient: " << e.what() << "\n";
    return kExitTrunc;
  } catch (const BuildError &e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
