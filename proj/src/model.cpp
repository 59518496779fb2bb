#include "cobord/model.hpp"

namespace cobord {

Model Model::build(const ModelParams &params) {
  FglContext ctx = build_fgl(params.nctx());
  build_c_table(ctx, -1, params.verifyRecip);
  return build_from(params, std::move(ctx));
}

Model Model::build_from(const ModelParams &params, FglContext ctx) {
  if (ctx.N != params.nctx())
    throw Error("Model: context truncation " + std::to_string(ctx.N) +
                " does not match required " + std::to_string(params.nctx()));
  if (!ctx.recip)
    throw Error("Model: context has no c-table");

  Model m;
  m.params_ = params;
  m.fgl_ = std::move(ctx);
  const int Nctx = params.nctx();
  const int Nd = params.nd();

  m.omega_ = compute_omega_basis(m.fgl_, Nctx);
  choose_generators(m.omega_, m.fgl_, Nd);

  // eq table: x-generators (same order as the omega X table), then d(i,j)
  auto eq = std::make_shared<VarTable>();
  for (const auto &gen : m.omega_.generators())
    eq->add(gen.name, gen.degree);
  auto dpair = std::make_shared<VarTable>();
  for (int i = 1; i + 1 <= Nd; ++i) {
    for (int j = 0; i + j + 1 <= Nd; ++j) {
      std::string name =
          "d(" + std::to_string(i) + "," + std::to_string(j) + ")";
      int v = eq->add(name, i + j + 1);
      dpair->add(name, i + j + 1);
      m.dvars_.push_back({i, j});
      m.dvar_index_[{i, j}] = v;
    }
  }
  m.eqT_ = eq;
  m.dpairT_ = dpair;

  // r table: eq table plus the Euler class
  auto r = std::make_shared<VarTable>(*eq);
  m.evar_ = r->add("e", -1);
  m.rT_ = r;

  // phi table: b's then d0, d1, ...
  auto phi = std::make_shared<VarTable>();
  for (size_t v = 0; v < m.fgl_.B->size(); ++v)
    phi->add(m.fgl_.B->name(static_cast<int>(v)),
             m.fgl_.B->weight(static_cast<int>(v)));
  m.phi_d0_ = static_cast<int>(phi->size());
  for (int i = 0; i + 1 <= Nctx; ++i)
    phi->add("d" + std::to_string(i), i + 1);
  m.phiT_ = phi;

  auto phiE = std::make_shared<VarTable>(*phi);
  m.phiE_evar_ = phiE->add("e", -1);
  m.phiET_ = phiE;

  TruncCtx t{Nctx};

  // c-table entries expressed in the x-generators, over the eq table
  for (const auto &[key, p] : m.fgl_.recip->c) {
    auto [i, j] = key;
    if (i < 1 || j < 0 || i + j + 1 > Nd)
      continue;
    auto expressed = m.omega_.express(p);
    if (!expressed)
      throw BuildError("c(" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not in the coefficient subring");
    m.cx_[{i, j}] = m.x_to_eq(*expressed);
  }

  // embedding images eps(d_{i,j}) = d_i d0^j + d0^{i+j+1} + sum c_{i,l} d0^{j-l}
  for (auto [i, j] : m.dvars_) {
    F2Poly img = F2Poly::zero(m.phiT_);
    img.toggle(Monomial::var(m.phi_dvar(i)).times(Monomial::var(m.phi_d0_, j)));
    img.toggle(Monomial::var(m.phi_d0_, i + j + 1));
    F2Poly acc = img;
    for (int l = 0; l < j; ++l) {
      F2Poly term = poly_mul_monomial(m.b_to_phi(m.fgl_.c(i, l)),
                                      Monomial::var(m.phi_d0_, j - l), t);
      acc = poly_add(acc, term);
    }
    // pullback coordinates carry the interior negative entries as well
    F2Poly pull = acc;
    for (int l = -i; l < 0; ++l) {
      const F2Poly &cil = m.fgl_.c(i, l);
      if (cil.is_zero())
        continue;
      pull = poly_add(pull, poly_mul_monomial(m.b_to_phi(cil),
                                              Monomial::var(m.phi_d0_, j - l),
                                              t));
    }
    m.eps_[{i, j}] = std::move(acc);
    m.epsPull_[{i, j}] = std::move(pull);
  }
  return m;
}

int Model::eq_xvar(int g) const {
  const auto &gens = omega_.generators();
  for (size_t v = 0; v < gens.size(); ++v)
    if (gens[v].degree == g)
      return static_cast<int>(v);
  return -1;
}

int Model::eq_dvar(int i, int j) const {
  auto it = dvar_index_.find({i, j});
  if (it == dvar_index_.end())
    throw TruncationExceeded("d(" + std::to_string(i) + "," +
                             std::to_string(j) + ") outside truncation (need " +
                             std::to_string(i + j + 1) + " <= " +
                             std::to_string(Nd()) + ")");
  return it->second;
}

bool Model::has_dvar(int i, int j) const {
  return dvar_index_.count({i, j}) > 0;
}

std::pair<int, int> Model::dvar_index(int v) const {
  int off = v - gen_count();
  if (off < 0 || off >= static_cast<int>(dvars_.size()))
    return {0, -1};
  return dvars_[off];
}

int Model::phi_dvar(int i) const {
  if (i < 0 || i + 1 > Nctx())
    throw TruncationExceeded("d" + std::to_string(i) + " outside truncation");
  return phi_d0_ + i;
}

const F2Poly &Model::cx(int i, int j) const {
  auto it = cx_.find({i, j});
  if (it == cx_.end())
    throw WindowInsufficient("cx(" + std::to_string(i) + "," +
                             std::to_string(j) + ") not available");
  return it->second;
}

const F2Poly &Model::eps_d(int i, int j) const {
  auto it = eps_.find({i, j});
  if (it == eps_.end())
    throw TruncationExceeded("eps(d(" + std::to_string(i) + "," +
                             std::to_string(j) + ")) not available");
  return it->second;
}

const F2Poly &Model::eps_d_pullback(int i, int j) const {
  auto it = epsPull_.find({i, j});
  if (it == epsPull_.end())
    throw TruncationExceeded("pullback eps(d(" + std::to_string(i) + "," +
                             std::to_string(j) + ")) not available");
  return it->second;
}

ESeries Model::phi_row(int i) const {
  if (i == 0) {
    ESeries row(B(), -1, Nctx() - 1);
    row.set_coeff(-1, F2Poly::one(B()));
    return row;
  }
  ESeries row(B(), -i - 1, Nctx() - i - 1);
  for (int j = row.lo(); j <= row.hi(); ++j)
    row.set_coeff(j, fgl_.c(i, j));
  return row;
}

namespace {

F2Poly rebase(const F2Poly &p, const VarTablePtr &target) {
  return F2Poly::of(target, p.terms());
}

} // namespace

F2Poly Model::b_to_phi(const F2Poly &p) const { return rebase(p, phiT_); }
F2Poly Model::x_to_eq(const F2Poly &p) const { return rebase(p, eqT_); }
F2Poly Model::eq_to_r(const F2Poly &p) const { return rebase(p, rT_); }
F2Poly Model::phi_to_phiE(const F2Poly &p) const { return rebase(p, phiET_); }

F2Poly Model::eq_x_part_to_X(const F2Poly &p) const {
  for (const auto &m : p.terms())
    for (const auto &[v, e] : m.factors())
      if (v >= omega_.generators().size())
        throw Error("eq_x_part_to_X: polynomial contains d-variables");
  return rebase(p, omega_.X());
}

const F2Poly &Model::gen_repr(int xvar) const {
  return omega_.generators().at(xvar).repr;
}

} // namespace cobord
