#ifndef COBORD_FGL_HPP
#define COBORD_FGL_HPP

#include <optional>
#include <string>

#include "cobord/series.hpp"

namespace cobord {

// ---------------------------------------------------------------------------
// The universal [2]-torsion formal group law, modelled faithfully inside
// B = F2[b1, b2, ...] as F(y,z) = exp(log y + log z) with
// exp(x) = x + sum b_i x^{i+1}. Two-torsion, symmetry and associativity are
// automatic in this model; the coefficient subring generated by the a_{i,j}
// is the model of the unoriented cobordism ring.
// ---------------------------------------------------------------------------

struct FglContext {
  int N = 0;          // truncation: all coefficients exact to weighted degree N
  VarTablePtr B;      // b1..bN, weight of b_i is i
  UniSeries exp, log; // exp(x) = x + sum b_i x^{i+1}, log = exp^{<-1>}
  BivarSeries F;      // coefficient of y^i z^j is a_{i,j}, degree i+j-1
  std::optional<RecipTable> recip; // c_{i,j}, coefficient of y^i e^j in 1/F

  FglContext(VarTablePtr b, int n)
      : N(n), B(b), exp(b, n + 1), log(b, n + 1), F(b, n + 1),
        zero_(F2Poly::zero(b)) {}

  // a_{i,j} for i+j <= N+1; a_{1,0} = a_{0,1} = 1.
  const F2Poly &a(int i, int j) const;
  // c_{i,j} for 0 <= i <= N-1, -i-1 <= j <= N-i-1. Requires build_c_table.
  const F2Poly &c(int i, int j) const;
  bool c_in_window(int i, int j) const;

  // Copy with the given monomial toggled in a_{i,j} (negative controls).
  FglContext with_a_toggled(int i, int j, const Monomial &m) const;

private:
  F2Poly zero_;
};

FglContext build_fgl(int N);

// Computes the reciprocal coefficient table via invert_F and validates the
// structural invariants (c_{i,-i-1} = 1, other negative entries vanish,
// homogeneity). eWindowHi <= N-1; entries certified for i+j+1 <= N.
void build_c_table(FglContext &ctx, int eWindowHi = -1, bool verify = true);

struct CoeffFailure {
  int degree;        // total formal degree of the failing coefficient
  std::string where; // rendered exponent key
};

struct CheckReport {
  bool ok = true;
  std::optional<CoeffFailure> first;

  void fail(int degree, std::string where) {
    if (ok || degree < first->degree) {
      ok = false;
      first = CoeffFailure{degree, std::move(where)};
    }
  }
};

// F(F(x,y),z) = F(x,F(y,z)) coefficientwise through total degree maxDegree.
CheckReport check_associativity(const FglContext &ctx, int maxDegree);

// Unitality F(x,0) = x, symmetry, and F(x,x) = 0 through total degree
// maxDegree + 1 in the table.
struct FglAxiomReport {
  CheckReport unital, symmetric, torsion;
  bool ok() const { return unital.ok && symmetric.ok && torsion.ok; }
  // first failing degree across the three axioms, INT_MAX when ok
  int first_degree() const;
};

FglAxiomReport check_fgl_axioms(const FglContext &ctx, int maxDegree);

} // namespace cobord

#endif
