#include "cobord/omega.hpp"

#include <algorithm>

namespace cobord {

bool is_twopower_minus_one(int d) {
  return d >= 1 && ((d + 1) & d) == 0;
}

long long partition_count(int n, const std::function<bool(int)> &excluded) {
  if (n < 0)
    return 0;
  std::vector<long long> f(n + 1, 0);
  f[0] = 1;
  for (int part = 1; part <= n; ++part) {
    if (excluded(part))
      continue;
    for (int s = part; s <= n; ++s)
      f[s] += f[s - part];
  }
  return f[n];
}

// ---------------------------------------------------------------------------
// OmegaBasis
// ---------------------------------------------------------------------------

int OmegaBasis::dim(int n) const {
  return static_cast<int>(basis(n).size());
}

const std::vector<F2Poly> &OmegaBasis::basis(int n) const {
  if (n < 0 || n > N_)
    throw TruncationExceeded("omega basis: degree " + std::to_string(n) +
                             " beyond " + std::to_string(N_));
  return basis_[n];
}

const OmegaBasis::Generator *OmegaBasis::generator_in_degree(int g) const {
  for (const auto &gen : gens_)
    if (gen.degree == g)
      return &gen;
  return nullptr;
}

std::optional<F2Poly> OmegaBasis::express(const F2Poly &elt) const {
  int n = 0;
  if (!elt.homogeneous(&n))
    throw Error("express: inhomogeneous input");
  if (elt.is_zero())
    return F2Poly::zero(X_);
  if (n > genMax_)
    throw TruncationExceeded("express: degree " + std::to_string(n) +
                             " beyond expression tables (" +
                             std::to_string(genMax_) + ")");
  const DegreeTable &tab = tables_[n];
  BitVec v(tab.columns.size());
  for (const auto &m : elt.terms()) {
    int idx = tab.columns.index_of(m);
    if (idx < 0)
      return std::nullopt; // monomial outside the degree-n slice of B
    v.set(idx);
  }
  auto combo = tab.solver.solve(std::move(v));
  if (!combo)
    return std::nullopt;
  std::vector<Monomial> terms;
  for (int row : *combo)
    terms.push_back(tab.xmons[row]);
  return F2Poly::of(X_, std::move(terms));
}

F2Poly OmegaBasis::express_or_throw(const F2Poly &elt) const {
  F2Poly out = F2Poly::zero(X_);
  // handle each homogeneous component
  std::vector<int> degrees;
  for (const auto &m : elt.terms()) {
    int d = m.degree(*B_);
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end())
      degrees.push_back(d);
  }
  for (int d : degrees) {
    auto part = express(elt.component(d));
    if (!part)
      throw NotInSubring("element is not in the coefficient subring");
    out = poly_add(out, *part);
  }
  return out;
}

bool OmegaBasis::in_omega(const F2Poly &elt) const {
  try {
    express_or_throw(elt);
    return true;
  } catch (const NotInSubring &) {
    return false;
  }
}

F2Poly OmegaBasis::eval_x(const F2Poly &xpoly) const {
  std::vector<const F2Poly *> images(X_->size(), nullptr);
  for (size_t v = 0; v < X_->size(); ++v)
    images[v] = &gens_[v].repr;
  return substitute(xpoly, images, B_, trunc_);
}

// a-variables of one weighted degree, deduplicated by symmetry, in the fixed
// scan order (i ascending).
static std::vector<std::pair<int, int>> a_vars_of_degree(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; 2 * i <= d + 1; ++i)
    out.push_back({i, d + 1 - i});
  return out;
}

OmegaBasis compute_omega_basis(const FglContext &ctx, int N) {
  if (N > ctx.N)
    throw TruncationExceeded("compute_omega_basis: N beyond context");
  OmegaBasis omega;
  omega.N_ = N;
  omega.B_ = ctx.B;
  omega.trunc_ = TruncCtx{ctx.N};
  omega.basis_.resize(N + 1);
  omega.basis_[0].push_back(F2Poly::one(ctx.B));

  for (int m = 1; m <= N; ++m) {
    auto columns = MonomialIndex(ctx.B);
    for (const auto &mon : monomials_of_degree(*ctx.B, m))
      columns.intern(mon);
    GF2Solver solver(columns.size());
    // candidates a_v * beta span Omega_m since the a_{i,j} generate
    for (int d = 1; d <= m; ++d) {
      for (auto [i, j] : a_vars_of_degree(d)) {
        const F2Poly &av = ctx.a(i, j);
        if (av.is_zero())
          continue;
        for (const F2Poly &beta : omega.basis_[m - d]) {
          F2Poly cand = poly_mul(av, beta, omega.trunc_);
          if (solver.add(columns.row(cand)))
            omega.basis_[m].push_back(std::move(cand));
        }
      }
    }
    long long expect = partition_count(m, is_twopower_minus_one);
    if (static_cast<long long>(omega.basis_[m].size()) != expect)
      throw BuildError("omega dimension mismatch at degree " +
                       std::to_string(m) + ": rank " +
                       std::to_string(omega.basis_[m].size()) + ", partitions " +
                       std::to_string(expect));
  }
  return omega;
}

void choose_generators(OmegaBasis &omega, const FglContext &ctx, int genMax) {
  if (genMax > omega.N_)
    throw TruncationExceeded("choose_generators: genMax beyond basis range");
  auto X = std::make_shared<VarTable>();
  omega.genMax_ = genMax;

  // degree-0 table: the empty monomial only
  omega.tables_.clear();
  omega.tables_.reserve(genMax + 1);

  for (int g = 0; g <= genMax; ++g) {
    auto columns = MonomialIndex(ctx.B);
    for (const auto &mon : monomials_of_degree(*ctx.B, g))
      columns.intern(mon);

    // decomposable monomials over the generators chosen so far
    VarTablePtr Xnow = std::make_shared<VarTable>(*X);
    std::vector<Monomial> xmons = monomials_of_degree(*Xnow, g);
    size_t maxRows = xmons.size() + 1;
    OmegaBasis::DegreeTable tab(ctx.B, columns.size(), maxRows);
    tab.columns = columns;

    auto expand = [&](const Monomial &xm) {
      F2Poly prod = F2Poly::one(ctx.B);
      for (const auto &[v, e] : xm.factors())
        prod = poly_mul(prod, poly_pow(omega.gens_[v].repr, e, omega.trunc_),
                        omega.trunc_);
      return prod;
    };

    for (const auto &xm : xmons) {
      if (!tab.solver.add(tab.columns.row(expand(xm))))
        throw BuildError("generators not polynomial: dependent monomial in "
                         "degree " +
                         std::to_string(g));
    }

    int need = omega.dim(g) - static_cast<int>(tab.solver.rank());
    if (need < 0 || need > 1)
      throw BuildError("generator bookkeeping failed in degree " +
                       std::to_string(g));
    if (need == 1) {
      if (is_twopower_minus_one(g))
        throw BuildError("generator required in excluded degree " +
                         std::to_string(g));
      bool found = false;
      for (auto [i, j] : a_vars_of_degree(g)) {
        const F2Poly &av = ctx.a(i, j);
        if (av.is_zero())
          continue;
        if (!tab.solver.independent(tab.columns.row(av)))
          continue;
        tab.solver.add(tab.columns.row(av));
        std::string name = "x(" + std::to_string(g) + ")";
        int v = X->add(name, g);
        omega.gens_.push_back({g, name, {i, j}, av});
        xmons.push_back(Monomial::var(v));
        found = true;
        break;
      }
      if (!found)
        throw BuildError("no independent a-variable in admissible degree " +
                         std::to_string(g));
    } else if (!is_twopower_minus_one(g) && g >= 2) {
      throw BuildError("no new generator needed in admissible degree " +
                       std::to_string(g));
    }
    tab.xmons = std::move(xmons);
    omega.tables_.push_back(std::move(tab));
  }
  omega.X_ = X;
}

} // namespace cobord
