#ifndef COBORD_EXTENDED_HPP
#define COBORD_EXTENDED_HPP

#include "cobord/equivariant.hpp"

namespace cobord {

// The Conner-Floyd operation: the unique coefficient-linear operator with
// Gamma(1) = 0, Gamma(d(i,j)) = d(i,j+1), and
// Gamma(d(i,j) * mu) = c_{i,j} Gamma(mu) + d(i,j+1) mu on monomials.
EqClass gamma(const Model &m, const EqClass &c);

// Splits u*m = r*u + g*a: r is the restriction, g the Gamma image.
struct USplit {
  F2Poly restrict_x; // over the eq table, d-free
  EqClass gamma_part;
};
USplit push_u(const Model &m, const EqClass &c);

// Element of the extended ring in normal form
//   sum_{j<s} lambda_j a^j u^{s-j} + a^s m,
// bigraded by sigma-weight s and topological degree t: lambda_j is
// homogeneous of degree t-(s-j) and m homogeneous of degree t.
struct ExtClass {
  int s = 0;
  int t = 0;
  std::vector<F2Poly> lambda; // size s, over the eq table, d-free
  EqClass m;

  bool is_zero() const;
};

ExtClass ext_zero(const Model &mod, int s, int t);
// Builds and normalizes a^{a_pow} u^{u_pow} * coeff.
ExtClass ext_from(const Model &mod, int a_pow, int u_pow, const EqClass &coeff);
ExtClass ext_add(const Model &mod, const ExtClass &x, const ExtClass &y);
ExtClass ext_mul(const Model &mod, const ExtClass &x, const ExtClass &y);
bool ext_equal(const Model &mod, const ExtClass &x, const ExtClass &y);

// Restriction to Omega_*[u]: a -> 0, u -> u, d(i,j) -> c_{i,j}.
struct OmegaU {
  F2Poly coeff; // over the eq table, d-free
  int upow = 0;
};
OmegaU ext_restrict(const Model &mod, const ExtClass &x);

// The transfer Omega_*[u] -> extended ring is zero.
ExtClass ext_transfer(const Model &mod, const OmegaU &w);

// Normalized geometric-fixed-points image: a -> 1, u -> d0, m -> embedding.
F2Poly ext_phi(const Model &mod, const ExtClass &x);

} // namespace cobord

#endif
