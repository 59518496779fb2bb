#include "cobord/extended.hpp"

namespace cobord {

namespace {

// Gamma of a single d-monomial (no coefficient part), peeling the first
// d-factor.
F2Poly gamma_dmonomial(const Model &m, const Monomial &mon) {
  const auto &factors = mon.factors();
  if (factors.empty())
    return F2Poly::zero(m.eqTable());
  TruncCtx t{2 * m.Nctx()};
  auto [v, e] = factors[0];
  auto [i, j] = m.dvar_index(v);
  // rest = mon / d(i,j)
  std::vector<Monomial::Factor> restf(factors.begin(), factors.end());
  if (e == 1)
    restf.erase(restf.begin());
  else
    restf[0].second = e - 1;
  Monomial rest(std::move(restf));

  F2Poly out = poly_mul_monomial(
      F2Poly::var(m.eqTable(), m.eq_dvar(i, j + 1)), rest, t);
  F2Poly grest = gamma_dmonomial(m, rest);
  if (!grest.is_zero())
    out = poly_add(out, poly_mul(m.cx(i, j), grest, t));
  return out;
}

// Splits a monomial over the eq table into coefficient (x) and d parts.
std::pair<Monomial, Monomial> split_monomial(const Model &m,
                                             const Monomial &mon) {
  std::vector<Monomial::Factor> xs, ds;
  for (const auto &f : mon.factors()) {
    if (f.first < static_cast<uint16_t>(m.gen_count()))
      xs.push_back(f);
    else
      ds.push_back(f);
  }
  return {Monomial(std::move(xs)), Monomial(std::move(ds))};
}

} // namespace

EqClass gamma(const Model &m, const EqClass &c) {
  TruncCtx t{2 * m.Nctx()};
  F2Poly out = F2Poly::zero(m.eqTable());
  for (const auto &mon : c.p.terms()) {
    auto [xpart, dpart] = split_monomial(m, mon);
    F2Poly g = gamma_dmonomial(m, dpart);
    out = poly_add(out, poly_mul_monomial(g, xpart, t));
  }
  return {out};
}

USplit push_u(const Model &m, const EqClass &c) {
  return {eq_restrict_x(m, c), gamma(m, c)};
}

bool ExtClass::is_zero() const {
  for (const auto &l : lambda)
    if (!l.is_zero())
      return false;
  return m.is_zero();
}

ExtClass ext_zero(const Model &mod, int s, int t) {
  ExtClass x;
  x.s = s;
  x.t = t;
  x.lambda.assign(s, F2Poly::zero(mod.eqTable()));
  x.m = eq_zero(mod);
  return x;
}

ExtClass ext_from(const Model &mod, int a_pow, int u_pow,
                  const EqClass &coeff) {
  if (a_pow < 0 || u_pow < 0)
    throw Error("ext_from: negative exponent");
  int cdeg = 0;
  if (!coeff.homogeneous(&cdeg))
    throw Error("ext_from: coefficient must be homogeneous");
  ExtClass x = ext_zero(mod, a_pow + u_pow, cdeg + u_pow);
  if (coeff.is_zero())
    return x;
  EqClass cur = coeff;
  for (int p = 0; p < u_pow; ++p) {
    x.lambda[a_pow + p] = eq_restrict_x(mod, cur);
    cur = gamma(mod, cur);
  }
  x.m = cur;
  return x;
}

ExtClass ext_add(const Model &, const ExtClass &x, const ExtClass &y) {
  if (x.is_zero() && x.s == 0 && x.t == 0)
    return y;
  if (y.is_zero() && y.s == 0 && y.t == 0)
    return x;
  if (x.s != y.s || x.t != y.t)
    throw Error("ext_add: bigrading mismatch (" + std::to_string(x.s) + "," +
                std::to_string(x.t) + ") vs (" + std::to_string(y.s) + "," +
                std::to_string(y.t) + ")");
  ExtClass out = x;
  for (int j = 0; j < x.s; ++j)
    out.lambda[j] = poly_add(out.lambda[j], y.lambda[j]);
  out.m = eq_add(out.m, y.m);
  return out;
}

ExtClass ext_mul(const Model &mod, const ExtClass &x, const ExtClass &y) {
  int s = x.s + y.s, t = x.t + y.t;
  if (t > mod.Nd())
    throw TruncationExceeded("ext_mul: degree " + std::to_string(t) +
                             " beyond generator range " +
                             std::to_string(mod.Nd()));
  ExtClass out = ext_zero(mod, s, t);
  auto acc = [&](int a_pow, int u_pow, const EqClass &coeff) {
    if (coeff.is_zero())
      return; // avoids a degenerate bigrading from the zero class
    out = ext_add(mod, out, ext_from(mod, a_pow, u_pow, coeff));
  };
  // lambda_j a^j u^{x.s-j} * lambda'_k a^k u^{y.s-k}
  for (int j = 0; j < x.s; ++j) {
    if (x.lambda[j].is_zero())
      continue;
    for (int k = 0; k < y.s; ++k) {
      if (y.lambda[k].is_zero())
        continue;
      EqClass prod = eq_mul(mod, {x.lambda[j]}, {y.lambda[k]});
      acc(j + k, (x.s - j) + (y.s - k), prod);
    }
  }
  // lambda_j a^j u^{x.s-j} * a^{y.s} m'
  for (int j = 0; j < x.s; ++j) {
    if (x.lambda[j].is_zero() || y.m.is_zero())
      continue;
    acc(j + y.s, x.s - j, eq_mul(mod, {x.lambda[j]}, y.m));
  }
  for (int k = 0; k < y.s; ++k) {
    if (y.lambda[k].is_zero() || x.m.is_zero())
      continue;
    acc(k + x.s, y.s - k, eq_mul(mod, {y.lambda[k]}, x.m));
  }
  // a^{x.s} m * a^{y.s} m'
  if (!x.m.is_zero() && !y.m.is_zero())
    acc(s, 0, eq_mul(mod, x.m, y.m));
  return out;
}

bool ext_equal(const Model &mod, const ExtClass &x, const ExtClass &y) {
  if (x.s != y.s || x.t != y.t)
    return false;
  for (int j = 0; j < x.s; ++j)
    if (x.lambda[j] != y.lambda[j])
      return false;
  return eq_equal(mod, x.m, y.m);
}

OmegaU ext_restrict(const Model &mod, const ExtClass &x) {
  if (x.s == 0)
    return {eq_restrict_x(mod, x.m), 0};
  return {x.lambda[0], x.s};
}

ExtClass ext_transfer(const Model &mod, const OmegaU &w) {
  int deg = w.coeff.degree();
  return ext_zero(mod, w.upow, deg + w.upow);
}

F2Poly ext_phi(const Model &mod, const ExtClass &x) {
  TruncCtx t{2 * mod.Nctx()};
  int d0 = mod.phi_dvar(0);
  F2Poly out = geometric_fixed(mod, x.m);
  for (int j = 0; j < x.s; ++j) {
    if (x.lambda[j].is_zero())
      continue;
    F2Poly lam = geometric_fixed(mod, {x.lambda[j]}); // x-part substitution
    out = poly_add(out,
                   poly_mul_monomial(lam, Monomial::var(d0, x.s - j), t));
  }
  return out;
}

} // namespace cobord
