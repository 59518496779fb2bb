#include "cobord/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cobord {

std::string cache_serialize(const FglContext &ctx) {
  if (!ctx.recip)
    throw Error("cache_save: c-table not built");
  std::ostringstream out;
  out << "cobordism-cache v1 N=" << ctx.N << " window=" << ctx.N - 1 << "\n";
  for (int i = 1; i + 1 <= ctx.N + 1; ++i)
    for (int j = 1; i + j <= ctx.N + 1; ++j)
      out << "a " << i << " " << j << " = " << render(ctx.a(i, j)) << "\n";
  for (const auto &[key, p] : ctx.recip->c)
    out << "c " << key.first << " " << key.second << " = " << render(p)
        << "\n";
  return out.str();
}

void cache_save(const FglContext &ctx, const std::string &path) {
  std::string data = cache_serialize(ctx);
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f)
      throw CacheError("cache_save: cannot open " + tmp);
    f << data;
    if (!f.good())
      throw CacheError("cache_save: write failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw CacheError("cache_save: rename failed for " + path);
}

FglContext cache_load(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw CacheError("cache_load: cannot open " + path);
  std::string header;
  if (!std::getline(f, header))
    throw CacheError("cache_load: empty file");
  int N = 0, window = 0;
  if (std::sscanf(header.c_str(), "cobordism-cache v1 N=%d window=%d", &N,
                  &window) != 2)
    throw CacheError("cache_load: bad header '" + header + "'");
  if (N < 2 || window != N - 1)
    throw CacheError("cache_load: inconsistent header");

  auto table = std::make_shared<VarTable>();
  for (int i = 1; i <= N; ++i)
    table->add("b" + std::to_string(i), i);
  VarTablePtr B = table;

  FglContext ctx(B, N);
  ctx.F.set_coeff({1, 0}, F2Poly::one(B));
  ctx.F.set_coeff({0, 1}, F2Poly::one(B));
  RecipTable recip;
  recip.yMax = N - 1;
  recip.N = N;
  for (int i = 0; i <= N - 1; ++i)
    for (int j = -i - 1; j <= N - i - 1; ++j)
      recip.c[{i, j}] = F2Poly::zero(B);

  std::string line;
  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty())
      continue;
    std::istringstream ls(line);
    std::string kind;
    int i = 0, j = 0;
    std::string eq;
    if (!(ls >> kind >> i >> j >> eq) || eq != "=" ||
        (kind != "a" && kind != "c"))
      throw CacheError("cache_load: bad record at line " +
                       std::to_string(lineno));
    std::string rest;
    std::getline(ls, rest);
    if (!rest.empty() && rest[0] == ' ')
      rest.erase(0, 1);
    F2Poly p = [&] {
      try {
        return parse_poly(rest, B);
      } catch (const ParseError &pe) {
        throw CacheError("cache_load: line " + std::to_string(lineno) + ": " +
                         pe.what());
      }
    }();
    int want = kind == "a" ? i + j - 1 : i + j + 1;
    int d = 0;
    if (!p.homogeneous(&d) || (!p.is_zero() && d != want))
      throw CacheError("cache_load: line " + std::to_string(lineno) +
                       ": entry not homogeneous of degree " +
                       std::to_string(want));
    if (kind == "a") {
      if (i < 1 || j < 1 || i + j > N + 1)
        throw CacheError("cache_load: a-index out of range at line " +
                         std::to_string(lineno));
      ctx.F.set_coeff({i, j}, std::move(p));
    } else {
      if (i < 0 || i > N - 1 || j < -i - 1 || j > N - i - 1)
        throw CacheError("cache_load: c-index out of range at line " +
                         std::to_string(lineno));
      recip.c[{i, j}] = std::move(p);
    }
  }

  // structural invariants (interior negative c-entries are not zero in
  // general, so only the extreme one is pinned)
  for (const auto &[key, p] : recip.c) {
    auto [i, j] = key;
    if (j == -i - 1 && !p.is_one())
      throw CacheError("cache_load: c(i,-i-1) != 1 at i=" + std::to_string(i));
  }
  if (!ctx.a(1, 1).is_zero())
    throw CacheError("cache_load: a(1,1) must vanish");
  for (int i = 1; i + 1 <= N + 1; ++i)
    for (int j = i; i + j <= N + 1; ++j)
      if (ctx.a(i, j) != ctx.a(j, i))
        throw CacheError("cache_load: a-table not symmetric at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");

  // exp is definitional; log is its reversion (cheap next to the tables)
  ctx.exp.set_coeff(1, F2Poly::one(B));
  for (int i = 1; i + 1 <= N + 1; ++i)
    ctx.exp.set_coeff(i + 1, F2Poly::var(B, i - 1));
  ctx.log = series_reversion(ctx.exp, TruncCtx{N});

  ctx.recip = std::move(recip);
  return ctx;
}

} // namespace cobord
