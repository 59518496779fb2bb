#ifndef COBORD_OMEGA_HPP
#define COBORD_OMEGA_HPP

#include <functional>
#include <optional>

#include "cobord/fgl.hpp"
#include "cobord/linalg.hpp"

namespace cobord {

struct NotInSubring : Error {
  explicit NotInSubring(const std::string &msg) : Error(msg) {}
};

// Number of multisets of parts summing to n, parts drawn from the positive
// integers with `excluded` removed.
long long partition_count(int n, const std::function<bool(int)> &excluded);

// The default exclusion 2^k - 1 (generator-free degrees of the cobordism
// ring).
bool is_twopower_minus_one(int d);

// ---------------------------------------------------------------------------
// The unoriented cobordism ring as a subring of B: degreewise bases spanned
// by monomials in the a_{i,j}, chosen polynomial generators x_g, and unique
// expressions of ring elements in those generators.
// ---------------------------------------------------------------------------

class OmegaBasis {
public:
  struct Generator {
    int degree;
    std::string name; // "x(g)"
    std::pair<int, int> a_index;
    F2Poly repr; // over B
  };

  int max_degree() const { return N_; }
  int gen_degree() const { return genMax_; }
  const VarTablePtr &B() const { return B_; }
  const VarTablePtr &X() const { return X_; } // one variable per generator

  int dim(int n) const;
  const std::vector<F2Poly> &basis(int n) const;
  const std::vector<Generator> &generators() const { return gens_; }
  const Generator *generator_in_degree(int g) const;

  // Unique expression of a homogeneous element of Omega_n (n <= gen_degree)
  // as a polynomial over X; nullopt when the element is not in the subring.
  std::optional<F2Poly> express(const F2Poly &elt) const;
  // As express, but throws NotInSubring / handles each homogeneous component.
  F2Poly express_or_throw(const F2Poly &elt) const;
  bool in_omega(const F2Poly &elt) const;

  // Evaluate a polynomial over X back into B.
  F2Poly eval_x(const F2Poly &xpoly) const;

  friend OmegaBasis compute_omega_basis(const FglContext &ctx, int N);
  friend void choose_generators(OmegaBasis &omega, const FglContext &ctx,
                                int genMax);

private:
  int N_ = 0;
  int genMax_ = -1;
  VarTablePtr B_;
  VarTablePtr X_;
  TruncCtx trunc_{0};
  std::vector<std::vector<F2Poly>> basis_;
  std::vector<Generator> gens_;
  struct DegreeTable {
    std::vector<Monomial> xmons; // over X, canonical order
    MonomialIndex columns;       // over B
    GF2Solver solver;            // rows = expansions of xmons, with combos
    DegreeTable(VarTablePtr B, size_t cols, size_t rows)
        : columns(std::move(B)), solver(cols, rows) {}
  };
  std::vector<DegreeTable> tables_; // index = degree, up to genMax
};

// Degreewise bases of Omega_* inside B through degree N, each dimension
// checked against the partition count (mismatch is a fatal build error).
OmegaBasis compute_omega_basis(const FglContext &ctx, int N);

// Picks x_g in each admissible degree g <= genMax: the first a-variable in
// the fixed order independent of the subalgebra generated below, then builds
// the expression tables. Deterministic.
void choose_generators(OmegaBasis &omega, const FglContext &ctx, int genMax);

} // namespace cobord

#endif
