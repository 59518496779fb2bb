#include "cobord/fgl.hpp"

#include <climits>

namespace cobord {

const F2Poly &FglContext::a(int i, int j) const {
  if (i < 0 || j < 0 || (i == 0 && j == 0) || i + j > N + 1)
    throw TruncationExceeded("a(" + std::to_string(i) + "," +
                             std::to_string(j) + ") outside truncation N=" +
                             std::to_string(N));
  auto it = F.coeffs().find({i, j});
  if (it != F.coeffs().end())
    return it->second;
  return zero_;
}

const F2Poly &FglContext::c(int i, int j) const {
  if (!recip)
    throw Error("c-table not built");
  return recip->at(i, j);
}

bool FglContext::c_in_window(int i, int j) const {
  return recip && recip->in_window(i, j);
}

FglContext FglContext::with_a_toggled(int i, int j, const Monomial &m) const {
  FglContext out = *this;
  F2Poly entry = out.F.coeff({i, j});
  entry.toggle(m);
  out.F.set_coeff({i, j}, std::move(entry));
  return out;
}

FglContext build_fgl(int N) {
  if (N < 2)
    throw Error("build_fgl: N must be >= 2");
  auto table = std::make_shared<VarTable>();
  for (int i = 1; i <= N; ++i)
    table->add("b" + std::to_string(i), i);
  VarTablePtr B = table;
  TruncCtx t{N};
  const int M = N + 1; // formal order carried by all series

  FglContext ctx(B, N);
  ctx.exp.set_coeff(1, F2Poly::one(B));
  for (int i = 1; i + 1 <= M; ++i)
    ctx.exp.set_coeff(i + 1, F2Poly::var(B, i - 1));
  ctx.log = series_reversion(ctx.exp, t);

  BivarSeries u(B, M);
  for (int k = 1; k <= M; ++k) {
    u.add_coeff({k, 0}, ctx.log.coeff(k));
    u.add_coeff({0, k}, ctx.log.coeff(k));
  }

  // F = exp(u) = u + sum b_i u^{i+1}
  BivarSeries pow = u;
  BivarSeries F = u;
  for (int k = 2; k <= M; ++k) {
    pow = formal_mul(pow, u, t);
    const F2Poly &ek = ctx.exp.coeff(k);
    if (ek.is_zero())
      continue;
    for (const auto &[key, p] : pow.coeffs())
      F.add_coeff(key, poly_mul(p, ek, t));
  }
  ctx.F = std::move(F);

  // cheap structural checks; failures are build bugs, not data
  FglAxiomReport rep = check_fgl_axioms(ctx, N);
  if (!rep.ok())
    throw BuildError("build_fgl: axiom violated at formal degree " +
                     std::to_string(rep.first_degree()));
  return ctx;
}

void build_c_table(FglContext &ctx, int eWindowHi, bool verify) {
  const int N = ctx.N;
  if (eWindowHi < 0)
    eWindowHi = N - 1;
  if (eWindowHi > N - 1)
    throw WindowInsufficient("build_c_table: window beyond truncation");
  TruncCtx t{N};
  ctx.recip = invert_F(ctx.F, N - 1, t, verify);

  // Validate the invariants the table must satisfy. Note that the interior
  // negative entries c(i,l) for -i-1 < l < 0 do NOT vanish in general: the
  // defining identity F*(1/F) = 1 forces c(2,-1) = c(1,0) already. Only the
  // extreme entry is pinned.
  const RecipTable &rt = *ctx.recip;
  for (const auto &[key, p] : rt.c) {
    auto [i, j] = key;
    int d = 0;
    if (!p.homogeneous(&d) || (!p.is_zero() && d != i + j + 1))
      throw BuildError("c-table: entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ") not homogeneous of degree " +
                       std::to_string(i + j + 1));
    if (j == -i - 1 && !p.is_one())
      throw BuildError("c-table: c(i,-i-1) != 1 at i=" + std::to_string(i));
  }
  if (!ctx.a(1, 1).is_zero())
    throw BuildError("a(1,1) must vanish");
}

int FglAxiomReport::first_degree() const {
  int d = INT_MAX;
  for (const CheckReport *r : {&unital, &symmetric, &torsion})
    if (!r->ok)
      d = std::min(d, r->first->degree);
  return d;
}

FglAxiomReport check_fgl_axioms(const FglContext &ctx, int maxDegree) {
  FglAxiomReport rep;
  int M = std::min(maxDegree + 1, ctx.N + 1);
  for (int i = 0; i <= M; ++i) {
    for (int j = 0; i + j <= M; ++j) {
      if (i == 0 && j == 0)
        continue;
      const F2Poly &aij = ctx.a(i, j);
      if (j == 0 && (i == 1 ? !aij.is_one() : !aij.is_zero()))
        rep.unital.fail(i, "x^" + std::to_string(i));
      if (aij != ctx.a(j, i))
        rep.symmetric.fail(i + j,
                           "(" + std::to_string(i) + "," + std::to_string(j) +
                               ")");
    }
  }
  for (int m = 1; m <= M; ++m) {
    F2Poly sum = F2Poly::zero(ctx.B);
    for (int i = 0; i <= m; ++i)
      sum = poly_add(sum, ctx.a(i, m - i));
    if (!sum.is_zero())
      rep.torsion.fail(m, "x^" + std::to_string(m));
  }
  return rep;
}

CheckReport check_associativity(const FglContext &ctx, int maxDegree) {
  TruncCtx t{ctx.N};
  int M = std::min(maxDegree, ctx.N + 1);
  const VarTablePtr &B = ctx.B;

  TrivarSeries X(B, M), Y(B, M), Z(B, M);
  X.set_coeff({1, 0, 0}, F2Poly::one(B));
  Y.set_coeff({0, 1, 0}, F2Poly::one(B));
  Z.set_coeff({0, 0, 1}, F2Poly::one(B));

  TrivarSeries Fxy = formal_eval2(ctx.F, X, Y, M, t);
  TrivarSeries Fyz = formal_eval2(ctx.F, Y, Z, M, t);
  TrivarSeries lhs = formal_eval2(ctx.F, Fxy, Z, M, t);
  TrivarSeries rhs = formal_eval2(ctx.F, X, Fyz, M, t);

  CheckReport rep;
  TrivarSeries diff = formal_add(lhs, rhs);
  for (const auto &[key, p] : diff.coeffs()) {
    if (p.is_zero())
      continue;
    rep.fail(key[0] + key[1] + key[2],
             "x^" + std::to_string(key[0]) + " y^" + std::to_string(key[1]) +
                 " z^" + std::to_string(key[2]));
  }
  return rep;
}

} // namespace cobord
