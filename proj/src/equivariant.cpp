#include "cobord/equivariant.hpp"

namespace cobord {

EqClass eq_zero(const Model &m) { return {F2Poly::zero(m.eqTable())}; }
EqClass eq_one(const Model &m) { return {F2Poly::one(m.eqTable())}; }

EqClass eq_xgen(const Model &m, int g) {
  int v = m.eq_xvar(g);
  if (v < 0)
    throw Error("no generator in degree " + std::to_string(g));
  return {F2Poly::var(m.eqTable(), v)};
}

EqClass eq_dgen(const Model &m, int i, int j) {
  return {F2Poly::var(m.eqTable(), m.eq_dvar(i, j))};
}

EqClass eq_add(const EqClass &a, const EqClass &b) {
  return {poly_add(a.p, b.p)};
}

EqClass eq_mul(const Model &m, const EqClass &a, const EqClass &b) {
  return {poly_mul(a.p, b.p, TruncCtx{2 * m.Nctx()})};
}

EqClass twisted_projective(const Model &m, int mdim, int j) {
  if (mdim < 1 || j < 0)
    throw Error("twisted_projective: need dimension >= 1 and iterate >= 0");
  if (mdim == 1)
    return eq_zero(m);
  return eq_dgen(m, mdim - 1, j);
}

F2Poly geometric_fixed(const Model &m, const EqClass &c) {
  TruncCtx t{2 * m.Nctx()};
  F2Poly out = F2Poly::zero(m.phiTable());
  for (const auto &mon : c.p.terms()) {
    F2Poly prod = F2Poly::one(m.phiTable());
    for (const auto &[v, e] : mon.factors()) {
      auto [i, j] = m.dvar_index(v);
      const F2Poly &img =
          j >= 0 ? m.eps_d(i, j) : m.b_to_phi(m.gen_repr(v));
      prod = poly_mul(prod, poly_pow(img, e, t), t);
    }
    out = poly_add(out, prod);
  }
  return out;
}

bool eq_equal(const Model &m, const EqClass &a, const EqClass &b) {
  return geometric_fixed(m, eq_add(a, b)).is_zero();
}

F2Poly eq_restrict(const Model &m, const EqClass &c) {
  TruncCtx t{2 * m.Nctx()};
  F2Poly out = F2Poly::zero(m.B());
  for (const auto &mon : c.p.terms()) {
    F2Poly prod = F2Poly::one(m.B());
    for (const auto &[v, e] : mon.factors()) {
      auto [i, j] = m.dvar_index(v);
      const F2Poly &img = j >= 0 ? m.fgl().c(i, j) : m.gen_repr(v);
      prod = poly_mul(prod, poly_pow(img, e, t), t);
    }
    out = poly_add(out, prod);
  }
  return out;
}

F2Poly eq_restrict_x(const Model &m, const EqClass &c) {
  return m.x_to_eq(m.omega().express_or_throw(eq_restrict(m, c)));
}

EqClass transfer(const Model &m, const F2Poly &) { return eq_zero(m); }

ESeries homotopy_fixed(const Model &m, const EqClass &c, int K) {
  if (K < 0)
    throw Error("homotopy_fixed: window must be >= 0");
  TruncCtx t{m.Nctx() + K};
  auto row = [&](int i, int j) {
    ESeries s(m.B(), 0, K);
    for (int l = 0; l <= K; ++l)
      s.set_coeff(l, m.fgl().c(i, j + l)); // throws when outside the window
    return s;
  };
  ESeries out = ESeries::zero(m.B(), 0, K);
  for (const auto &mon : c.p.terms()) {
    ESeries prod = ESeries::constant(F2Poly::one(m.B()), K);
    for (const auto &[v, e] : mon.factors()) {
      ESeries base = [&] {
        auto [i, j] = m.dvar_index(v);
        if (j >= 0)
          return row(i, j);
        return ESeries::constant(m.gen_repr(v), K);
      }();
      for (int rep = 0; rep < e; ++rep)
        prod = eseries_mul(prod, base, t);
    }
    out = eseries_add(out, prod);
  }
  return out;
}

std::vector<F2Poly> gamma_underlying_series(const Model &m, const EqClass &c,
                                            int K) {
  ESeries s = homotopy_fixed(m, c, K);
  std::vector<F2Poly> out;
  for (int n = 0; n <= K; ++n)
    out.push_back(s.coeff(n));
  return out;
}

F2Poly relation_poly(const Model &m, int i, int j, int k, int l) {
  TruncCtx t{2 * m.Nctx()};
  F2Poly dij = eq_dgen(m, i, j).p;
  F2Poly dkl1 = eq_dgen(m, k, l + 1).p;
  F2Poly dij1 = eq_dgen(m, i, j + 1).p;
  F2Poly dkl = eq_dgen(m, k, l).p;
  F2Poly lhs = poly_mul(poly_add(dij, m.cx(i, j)), dkl1, t);
  F2Poly rhs = poly_mul(dij1, poly_add(dkl, m.cx(k, l)), t);
  return poly_add(lhs, rhs);
}

std::vector<F2Poly> relation_list(const Model &m, int maxDegree) {
  std::vector<F2Poly> out;
  for (int i = 1; i + 2 <= maxDegree; ++i)
    for (int j = 0; i + j + 2 <= maxDegree; ++j)
      for (int k = i; k + 2 <= maxDegree; ++k)
        for (int l = (k == i ? j + 1 : 0); k + l + 2 <= maxDegree; ++l)
          out.push_back(relation_poly(m, i, j, k, l));
  return out;
}

int dim_presented(const Model &m, int n) {
  if (n > m.N())
    throw TruncationExceeded("dim_presented: degree beyond truncation");
  return graded_quotient_dim(m.eqTable(), relation_list(m, m.N()), n);
}

int dim_image(const Model &m, int n) {
  if (n > m.N())
    throw TruncationExceeded("dim_image: degree beyond truncation");
  auto mons = monomials_of_degree(*m.eqTable(), n);
  MonomialIndex columns(m.phiTable());
  std::vector<F2Poly> images;
  images.reserve(mons.size());
  for (const auto &mon : mons) {
    F2Poly img = geometric_fixed(m, {F2Poly::of(m.eqTable(), {mon})});
    columns.intern_all(img);
    images.push_back(std::move(img));
  }
  GF2Solver solver(columns.size());
  int rank = 0;
  for (const auto &img : images)
    if (solver.add(columns.row(img)))
      ++rank;
  return rank;
}

std::optional<EqClass> membership(const Model &m, const F2Poly &phi_elt) {
  int n = 0;
  if (!phi_elt.homogeneous(&n))
    throw Error("membership: inhomogeneous input");
  if (phi_elt.is_zero())
    return eq_zero(m);
  if (n > m.N())
    throw TruncationExceeded("membership: degree beyond truncation");
  auto mons = monomials_of_degree(*m.eqTable(), n);
  MonomialIndex columns(m.phiTable());
  std::vector<F2Poly> images;
  for (const auto &mon : mons) {
    F2Poly img = geometric_fixed(m, {F2Poly::of(m.eqTable(), {mon})});
    columns.intern_all(img);
    images.push_back(std::move(img));
  }
  columns.intern_all(phi_elt);
  GF2Solver solver(columns.size(), mons.size());
  for (const auto &img : images)
    solver.add(columns.row(img));
  auto combo = solver.solve(columns.row(phi_elt));
  if (!combo)
    return std::nullopt;
  std::vector<Monomial> terms;
  for (int row : *combo)
    terms.push_back(mons[row]);
  return EqClass{F2Poly::of(m.eqTable(), std::move(terms))};
}

} // namespace cobord
