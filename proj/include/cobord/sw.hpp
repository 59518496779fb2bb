#ifndef COBORD_SW_HPP
#define COBORD_SW_HPP

#include <map>
#include <vector>

#include "cobord/omega.hpp"

namespace cobord {

// Tangential Stiefel-Whitney numbers of a degree-n class: one bit per
// partition of n (the number attached to the monomial w_lambda).
struct SwProfile {
  int n = 0;
  std::map<std::vector<int>, int> values; // partition, descending parts

  bool all_zero() const;
  bool operator==(const SwProfile &o) const {
    return n == o.n && values == o.values;
  }
};

// All partitions of n, parts descending, deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

// Tangential SW numbers of a product of real projective spaces, computed
// from w(RP^m) = (1+x)^{m+1} in F2[x]/x^{m+1} and the Whitney formula.
SwProfile sw_numbers_projective_product(const std::vector<int> &dims);

// Tangential SW numbers of a class in the coefficient subring, by pairing
// its b-monomials against the inverted total classes: the raw pairing gives
// normal numbers, the inversion converts them to tangential ones.
SwProfile sw_numbers_of_class(const F2Poly &elt, int n,
                              const OmegaBasis &omega);

} // namespace cobord

#endif
