#include "cobord/verify.hpp"

#include <algorithm>

namespace cobord {

namespace {

int effective_max(const Model &m, const VerifyOptions &opt) {
  return opt.maxDegree < 0 ? m.N() : std::min(opt.maxDegree, m.N());
}

std::string dim_row(const std::vector<int> &v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

} // namespace

RandomClasses::RandomClasses(const Model &m, uint64_t seed, int maxDegree)
    : m_(m), rng_(seed) {
  byDegree_.resize(maxDegree + 1);
  for (int n = 0; n <= maxDegree; ++n)
    byDegree_[n] = monomials_of_degree(*m.eqTable(), n);
}

EqClass RandomClasses::sample(int degree, int terms) {
  const auto &mons = byDegree_.at(degree);
  F2Poly p = F2Poly::zero(m_.eqTable());
  if (mons.empty())
    return {p};
  for (int i = 0; i < terms; ++i)
    p.toggle(mons[rng_() % mons.size()]);
  return {p};
}

EqClass RandomClasses::sample_up_to(int maxDegree, int terms) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    int n = static_cast<int>(rng_() % (maxDegree + 1));
    if (!byDegree_.at(n).empty())
      return sample(n, terms);
  }
  return sample(0, 1);
}

// ---------------------------------------------------------------------------
// fgl suite
// ---------------------------------------------------------------------------

SuiteReport verify_fgl(const Model &m, const VerifyOptions &opt) {
  SuiteReport rep;
  rep.suite = "fgl";
  int maxDeg = effective_max(m, opt);
  const FglContext &ctx = m.fgl();

  FglAxiomReport ax = check_fgl_axioms(ctx, maxDeg);
  auto axline = [&](const char *name, const CheckReport &r) {
    rep.add(name, r.ok,
            r.ok ? "" : "first failure at degree " +
                            std::to_string(r.first->degree) + " (" +
                            r.first->where + ")");
  };
  axline("unitality F(x,0)=x", ax.unital);
  axline("symmetry F(y,z)=F(z,y)", ax.symmetric);
  axline("two-torsion F(x,x)=0", ax.torsion);

  CheckReport assoc = check_associativity(ctx, maxDeg);
  axline("associativity through requested degree", assoc);

  rep.add("a(1,1) = 0", ctx.a(1, 1).is_zero());

  // reciprocal table
  auto bad = recip_identity_failure(ctx.F, *ctx.recip, TruncCtx{ctx.N});
  rep.add("F*(1/F) = 1 on certified window", !bad.has_value(),
          bad.value_or(""));
  bool pattern = true;
  std::string where;
  for (int i = 0; i <= ctx.N - 1 && pattern; ++i) {
    for (int l = -i - 1; l < 0 && pattern; ++l) {
      const F2Poly &c = ctx.c(i, l);
      bool ok = l == -i - 1 ? c.is_one() : c.is_zero();
      if (!ok) {
        pattern = false;
        where = "c(" + std::to_string(i) + "," + std::to_string(l) + ")";
      }
    }
  }
  rep.add("c(i,-i-1)=1 and other negative entries vanish", pattern, where);
  return rep;
}

// ---------------------------------------------------------------------------
// omega suite
// ---------------------------------------------------------------------------

SuiteReport verify_omega(const Model &m, const VerifyOptions &opt) {
  SuiteReport rep;
  rep.suite = "omega";
  int maxDeg = effective_max(m, opt);
  const OmegaBasis &om = m.omega();

  std::vector<int> dims;
  bool dimsOk = true;
  std::string bad;
  for (int n = 0; n <= maxDeg; ++n) {
    int d = om.dim(n);
    dims.push_back(d);
    long long expect = partition_count(n, is_twopower_minus_one);
    if (d != expect) {
      dimsOk = false;
      bad = "degree " + std::to_string(n) + ": rank " + std::to_string(d) +
            " vs partitions " + std::to_string(expect);
    }
  }
  rep.add("dim equals partition count through degree " +
              std::to_string(maxDeg),
          dimsOk, dimsOk ? dim_row(dims) : bad);

  bool gensOk = true;
  std::string gbad;
  for (int g = 2; g <= om.gen_degree(); ++g) {
    bool have = om.generator_in_degree(g) != nullptr;
    bool want = !is_twopower_minus_one(g);
    if (have != want) {
      gensOk = false;
      gbad = "degree " + std::to_string(g);
      break;
    }
  }
  rep.add("exactly one polynomial generator per admissible degree", gensOk,
          gbad);

  // express round-trips on every basis element in low degrees
  bool exprOk = true;
  std::string ebad;
  for (int n = 0; n <= std::min(maxDeg, om.gen_degree()) && exprOk; ++n) {
    for (const F2Poly &w : om.basis(n)) {
      auto x = om.express(w);
      if (!x || om.eval_x(*x) != w) {
        exprOk = false;
        ebad = "degree " + std::to_string(n);
        break;
      }
    }
  }
  rep.add("express/eval round-trip on basis elements", exprOk, ebad);

  // a class outside the subring is rejected
  bool reject = !om.in_omega(F2Poly::var(m.B(), 0)); // b1
  rep.add("b1 is not in the subring", reject);
  return rep;
}

// ---------------------------------------------------------------------------
// relations suite
// ---------------------------------------------------------------------------

SuiteReport verify_relations(const Model &m, const VerifyOptions &opt) {
  SuiteReport rep;
  rep.suite = "relations";
  int maxDeg = effective_max(m, opt);
  auto rels = relation_list(m, maxDeg);
  bool ok = true;
  std::string bad;
  for (size_t r = 0; r < rels.size(); ++r) {
    if (!geometric_fixed(m, {rels[r]}).is_zero()) {
      ok = false;
      bad = "relation #" + std::to_string(r);
      break;
    }
  }
  rep.add("embedding annihilates all " + std::to_string(rels.size()) +
              " relations with indices in range",
          ok, bad);
  return rep;
}

// ---------------------------------------------------------------------------
// completeness suite
// ---------------------------------------------------------------------------

SuiteReport verify_completeness(const Model &m, const VerifyOptions &opt) {
  SuiteReport rep;
  rep.suite = "completeness";
  int maxDeg = effective_max(m, opt);
  std::vector<int> pres, img;
  bool ok = true;
  std::string bad;
  for (int n = 0; n <= maxDeg; ++n) {
    pres.push_back(dim_presented(m, n));
    img.push_back(dim_image(m, n));
    if (pres.back() != img.back()) {
      ok = false;
      bad = "degree " + std::to_string(n) + ": presented " +
            std::to_string(pres.back()) + " vs image " +
            std::to_string(img.back());
    }
  }
  rep.add("presented dimension equals embedded rank", ok,
          ok ? dim_row(pres) : bad);

  std::vector<int> anchor{1, 0, 2, 2};
  bool anchorsOk = true;
  for (int n = 0; n <= 3 && n <= maxDeg; ++n)
    anchorsOk = anchorsOk && pres[n] == anchor[n];
  rep.add("low-degree anchors 1,0,2,2", anchorsOk,
          dim_row({pres.begin(), pres.begin() + std::min<size_t>(4, pres.size())}));
  return rep;
}

// ---------------------------------------------------------------------------
// tate suite (Tate square + the R-model)
// ---------------------------------------------------------------------------

SuiteReport verify_tate(const Model &m, const VerifyOptions &opt) {
  SuiteReport rep;
  rep.suite = "tate";
  int maxDeg = effective_max(m, opt);
  // degree n uses windows up to n+3 with coefficients of degree n+(n+3)
  int fit = (m.Nctx() - 3) / 2;
  int tateMax = opt.tateMax < 0 ? std::min({maxDeg, 8, fit}) : opt.tateMax;

  bool surj = true, kern = true, stab = true;
  std::string sbad, kbad, tbad;
  std::vector<int> kernels;
  for (int n = 0; n <= tateMax; ++n) {
    TateReport tr = check_tate_square(m, n, n + 2);
    kernels.push_back(tr.kernel_dim);
    if (!tr.surjective) {
      surj = false;
      sbad = "degree " + std::to_string(n);
    }
    int want = dim_image(m, n);
    if (tr.kernel_dim != want) {
      kern = false;
      kbad = "degree " + std::to_string(n) + ": kernel " +
             std::to_string(tr.kernel_dim) + " vs ring dimension " +
             std::to_string(want);
    }
    if (!tr.stable) {
      stab = false;
      tbad = "degree " + std::to_string(n);
    }
  }
  rep.add("map onto windowed Tate slice is surjective", surj, sbad);
  rep.add("kernel dimension equals ring dimension", kern,
          kern ? dim_row(kernels) : kbad);
  rep.add("stable under window growth", stab, tbad);

  // e-regularity
  int eregMax = std::min(tateMax, m.Nd() - opt.eregWindow);
  bool ereg = true;
  std::string ebad;
  for (int n = 0; n <= eregMax; ++n) {
    ERegReport er = check_e_regular(m, n, opt.eregWindow);
    if (!er.ok()) {
      ereg = false;
      ebad = "degree " + std::to_string(n) + ": embed rank " +
             std::to_string(er.embed_rank) + ", e rank " +
             std::to_string(er.e_rank);
      break;
    }
  }
  rep.add("multiplication by e injective on slices through degree " +
              std::to_string(eregMax),
          ereg, ebad);

  // randomized normal-form properties
  RandomClasses rnd(m, opt.seed, std::min(maxDeg, 6));
  std::mt19937_64 &rng = rnd.rng();
  bool idem = true, orderInd = true;
  std::string ibad, obad;
  TruncCtx t{2 * m.Nctx()};
  for (int s = 0; s < opt.nfSamples; ++s) {
    // random polynomial in e and the d(i,j) over the coefficients
    EqClass base = rnd.sample_up_to(std::min(maxDeg, 6), 2);
    int epow = static_cast<int>(rng() % 3);
    F2Poly expr = poly_mul_monomial(m.eq_to_r(base.p),
                                    Monomial::var(m.r_evar(), epow), t);
    RElem nf1 = r_normal_form(m, expr);
    if (!r_is_normal(m, nf1.whole(m))) {
      idem = false;
      ibad = "sample " + std::to_string(s);
      break;
    }
    RElem nf1again = r_normal_form(m, nf1.whole(m));
    if (!(nf1again.f0 == nf1.f0 && nf1again.f1 == nf1.f1)) {
      idem = false;
      ibad = "sample " + std::to_string(s);
      break;
    }
    RewritePolicy randomized;
    randomized.rng = &rng;
    RElem nf2 = r_normal_form(m, expr, randomized);
    if (!r_equal(m, nf1, nf2)) {
      orderInd = false;
      obad = "sample " + std::to_string(s);
      break;
    }
  }
  rep.add("normal form idempotent on " + std::to_string(opt.nfSamples) +
              " randomized inputs",
          idem, ibad);
  rep.add("normal form independent of rewrite order", orderInd, obad);
  return rep;
}

// ---------------------------------------------------------------------------
// extended suite (Gamma calculus + the a/u ring)
// ---------------------------------------------------------------------------

SuiteReport verify_extended(const Model &m, const VerifyOptions &opt) {
  SuiteReport rep;
  rep.suite = "extended";
  int maxDeg = effective_max(m, opt);

  // Gamma well-defined on generator pairs: both peeling orders agree
  bool wd = true;
  std::string wbad;
  for (int i = 1; i + 2 <= maxDeg && wd; ++i)
    for (int j = 0; i + j + 2 <= maxDeg && wd; ++j)
      for (int k = i; k + 2 <= maxDeg && wd; ++k)
        for (int l = (k == i ? j : 0); k + l + 2 <= maxDeg && wd; ++l) {
          if (i + j + k + l + 3 > m.Nd())
            continue;
          EqClass dij = eq_dgen(m, i, j), dkl = eq_dgen(m, k, l);
          EqClass peel1 =
              eq_add(eq_mul(m, {m.cx(i, j)}, eq_dgen(m, k, l + 1)),
                     eq_mul(m, eq_dgen(m, i, j + 1), dkl));
          EqClass peel2 =
              eq_add(eq_mul(m, {m.cx(k, l)}, eq_dgen(m, i, j + 1)),
                     eq_mul(m, eq_dgen(m, k, l + 1), dij));
          if (!eq_equal(m, peel1, peel2)) {
            wd = false;
            wbad = "d(" + std::to_string(i) + "," + std::to_string(j) +
                   ")*d(" + std::to_string(k) + "," + std::to_string(l) + ")";
          }
        }
  rep.add("Gamma well-defined on generator pairs", wd, wbad);

  RandomClasses rnd(m, opt.seed + 1, std::min(maxDeg - 2, 6));
  std::mt19937_64 &rng = rnd.rng();

  // Leibniz law and series consistency
  bool leib = true, series = true;
  std::string lbad, sbad;
  int gmax = std::min(maxDeg - 2, 6);
  int tested = 0;
  for (int s = 0; tested < opt.gammaSamples && s < 64 * opt.gammaSamples;
       ++s) {
    EqClass a = rnd.sample_up_to(gmax, 2);
    EqClass b = rnd.sample_up_to(gmax, 2);
    if (a.degree() + b.degree() + 1 > m.Nd())
      continue;
    ++tested;
    if (leib) {
      EqClass lhs = gamma(m, eq_mul(m, a, b));
      EqClass rhs = eq_add(eq_mul(m, {eq_restrict_x(m, a)}, gamma(m, b)),
                           eq_mul(m, gamma(m, a), b));
      if (!eq_equal(m, lhs, rhs)) {
        leib = false;
        lbad = "sample " + std::to_string(s);
      }
    }
    if (series) {
      int steps = std::min<int>(4, m.Nd() - a.degree());
      auto entries = gamma_underlying_series(m, a, steps);
      EqClass cur = a;
      for (int p = 0; p <= steps; ++p) {
        if (eq_restrict(m, cur) != entries[p]) {
          series = false;
          sbad = "sample " + std::to_string(s) + ", step " +
                 std::to_string(p);
          break;
        }
        if (p < steps)
          cur = gamma(m, cur);
      }
    }
    if (!leib && !series)
      break;
  }
  rep.add("Leibniz law for Gamma on randomized pairs", leib, lbad);
  rep.add("restriction of Gamma iterates matches the series", series, sbad);

  // ext_phi vanishes on both relation families
  bool fam1 = true, fam2 = true;
  std::string f1bad, f2bad;
  for (const auto &r : relation_list(m, maxDeg))
    if (!geometric_fixed(m, {r}).is_zero()) {
      fam1 = false;
      f1bad = "d-relation";
      break;
    }
  ExtClass u = ext_from(m, 0, 1, eq_one(m));
  ExtClass a1 = ext_from(m, 1, 0, eq_one(m));
  for (int i = 1; fam2 && i + 2 <= m.Nd(); ++i)
    for (int j = 0; fam2 && i + j + 2 <= m.Nd(); ++j) {
      EqClass inner = eq_add(eq_dgen(m, i, j), {m.cx(i, j)});
      ExtClass lhs = ext_mul(m, u, ext_from(m, 0, 0, inner));
      ExtClass rhs = ext_mul(m, a1, ext_from(m, 0, 0, eq_dgen(m, i, j + 1)));
      F2Poly img = poly_add(ext_phi(m, lhs), ext_phi(m, rhs));
      if (!img.is_zero()) {
        fam2 = false;
        f2bad = "u(d(" + std::to_string(i) + "," + std::to_string(j) +
                ")+c) + a d(" + std::to_string(i) + "," +
                std::to_string(j + 1) + ")";
      }
    }
  rep.add("normalized fixed-point map kills the d-relations", fam1, f1bad);
  rep.add("normalized fixed-point map kills the u-relations", fam2, f2bad);

  // randomized products: bigrading, restriction and fixed-point
  // multiplicativity
  bool grading = true, restr = true, transferZero = true, phiMul = true;
  std::string gbad2, rbad, pbad;
  TruncCtx t{2 * m.Nctx()};
  int products = 0;
  for (int s = 0; products < opt.extSamples && s < 64 * opt.extSamples; ++s) {
    int s1 = static_cast<int>(rng() % 3), s2 = static_cast<int>(rng() % 2);
    int u1 = static_cast<int>(rng() % 2), u2 = static_cast<int>(rng() % 2);
    EqClass c1 = rnd.sample_up_to(3, 2);
    EqClass c2 = rnd.sample_up_to(3, 2);
    ExtClass x = ext_from(m, s1, u1, c1);
    ExtClass y = ext_from(m, s2, u2, c2);
    if (x.t + y.t > std::min(8, m.Nd()) || x.s + y.s > 4)
      continue;
    ++products;
    ExtClass xy = ext_mul(m, x, y);
    if (xy.s != x.s + y.s || xy.t != x.t + y.t) {
      grading = false;
      gbad2 = "sample " + std::to_string(s);
    }
    // normal-form component degrees
    for (int j = 0; j < xy.s; ++j) {
      int d = 0;
      if (!xy.lambda[j].homogeneous(&d) ||
          (!xy.lambda[j].is_zero() && d != xy.t - (xy.s - j))) {
        grading = false;
        gbad2 = "sample " + std::to_string(s) + " lambda_" + std::to_string(j);
      }
    }
    int md = 0;
    if (!xy.m.homogeneous(&md) || (!xy.m.is_zero() && md != xy.t)) {
      grading = false;
      gbad2 = "sample " + std::to_string(s) + " m-part";
    }
    OmegaU rx = ext_restrict(m, x), ry = ext_restrict(m, y);
    OmegaU rxy = ext_restrict(m, xy);
    F2Poly prod = poly_mul(rx.coeff, ry.coeff, t);
    if (!(rxy.upow == rx.upow + ry.upow || prod.is_zero()) ||
        (prod.is_zero() ? !rxy.coeff.is_zero() : rxy.coeff != prod)) {
      restr = false;
      rbad = "sample " + std::to_string(s);
    }
    if (ext_phi(m, xy) != poly_mul(ext_phi(m, x), ext_phi(m, y), t)) {
      phiMul = false;
      pbad = "sample " + std::to_string(s);
    }
    if (!ext_transfer(m, rx).is_zero())
      transferZero = false;
    if (!grading && !restr && !phiMul)
      break;
  }
  rep.add("products preserve the bigraded normal form", grading, gbad2);
  rep.add("restriction to Omega[u] is multiplicative", restr, rbad);
  rep.add("normalized fixed-point map is multiplicative", phiMul, pbad);
  rep.add("transfer from Omega[u] is zero", transferZero);

  // empirical rank data for the normalized map on sigma-weight 2 slices
  {
    std::vector<int> full, got;
    for (int tdeg = 2; tdeg <= std::min(6, maxDeg); ++tdeg) {
      int sdim = 0;
      std::vector<F2Poly> images;
      MonomialIndex cols(m.phiTable());
      const int s2 = 2;
      for (int j = 0; j < s2; ++j) {
        int ldeg = tdeg - (s2 - j);
        if (ldeg < 0)
          continue;
        for (const auto &xm : monomials_of_degree(*m.omega().X(), ldeg)) {
          ExtClass v = ext_zero(m, s2, tdeg);
          v.lambda[j] = m.x_to_eq(F2Poly::of(m.omega().X(), {xm}));
          F2Poly img = ext_phi(m, v);
          cols.intern_all(img);
          images.push_back(img);
          ++sdim;
        }
      }
      // a^2-part: independent monomial images modulo relations
      auto mons = monomials_of_degree(*m.eqTable(), tdeg);
      MonomialIndex mcols(m.phiTable());
      std::vector<F2Poly> mimgs;
      for (const auto &mon : mons) {
        F2Poly img = geometric_fixed(m, {F2Poly::of(m.eqTable(), {mon})});
        mcols.intern_all(img);
        mimgs.push_back(img);
      }
      GF2Solver msolver(mcols.size());
      for (size_t q = 0; q < mons.size(); ++q)
        if (msolver.add(mcols.row(mimgs[q]))) {
          ExtClass v = ext_zero(m, 2, tdeg);
          v.m = {F2Poly::of(m.eqTable(), {mons[q]})};
          F2Poly img = ext_phi(m, v);
          cols.intern_all(img);
          images.push_back(img);
          ++sdim;
        }
      GF2Solver solver(cols.size());
      int rank = 0;
      for (const auto &img : images)
        if (solver.add(cols.row(img)))
          ++rank;
      full.push_back(sdim);
      got.push_back(rank);
    }
    rep.add("rank data for the normalized map at sigma-weight 2", true,
            "slice dims " + dim_row(full) + ", ranks " + dim_row(got));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// sw suite
// ---------------------------------------------------------------------------

SuiteReport verify_sw(const Model &m, const VerifyOptions &opt) {
  SuiteReport rep;
  rep.suite = "sw";
  int maxIdx = std::min(6, m.N() - 1);

  bool cross = true;
  std::string cbad;
  for (int i = 1; i <= maxIdx; ++i) {
    SwProfile fromClass = sw_numbers_of_class(m.fgl().c(i, 0), i + 1,
                                              m.omega());
    SwProfile fromManifold = sw_numbers_projective_product({i + 1});
    if (!(fromClass == fromManifold)) {
      cross = false;
      cbad += (cbad.empty() ? "index " : ", ") + std::to_string(i);
    }
  }
  rep.add("class restrictions match projective-space numbers", cross, cbad);

  rep.add("one-dimensional projective space bounds",
          sw_numbers_projective_product({1}).all_zero());
  rep.add("three-dimensional projective space bounds",
          sw_numbers_projective_product({3}).all_zero());

  // the pairing separates the ring degreewise
  int swMax = std::min({8, m.omega().gen_degree(), effective_max(m, opt)});
  bool inj = true;
  std::string ibad;
  for (int n = 0; n <= swMax && inj; ++n) {
    auto parts = partitions_of(n);
    std::map<std::vector<int>, int> colIndex;
    for (size_t idx = 0; idx < parts.size(); ++idx)
      colIndex[parts[idx]] = static_cast<int>(idx);
    GF2Solver solver(parts.size());
    int rank = 0;
    for (const F2Poly &w : m.omega().basis(n)) {
      SwProfile prof = sw_numbers_of_class(w, n, m.omega());
      BitVec row(parts.size());
      for (const auto &[lambda, bit] : prof.values)
        if (bit)
          row.set(colIndex[lambda]);
      if (solver.add(std::move(row)))
        ++rank;
    }
    if (rank != m.omega().dim(n)) {
      inj = false;
      ibad = "degree " + std::to_string(n);
    }
  }
  rep.add("pairing has full rank through degree " + std::to_string(swMax),
          inj, ibad);
  return rep;
}

std::vector<SuiteReport> verify_all(const Model &m, const VerifyOptions &opt) {
  return {verify_fgl(m, opt),         verify_omega(m, opt),
          verify_relations(m, opt),   verify_completeness(m, opt),
          verify_tate(m, opt),        verify_extended(m, opt),
          verify_sw(m, opt)};
}

} // namespace cobord
