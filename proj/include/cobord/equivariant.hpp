#ifndef COBORD_EQUIVARIANT_HPP
#define COBORD_EQUIVARIANT_HPP

#include "cobord/model.hpp"

namespace cobord {

// Element of the equivariant cobordism ring, written as a polynomial in the
// generators d(i,j) with coefficients in the x-generators. Equality is not
// syntactic: two classes are equal iff their images under the embedding into
// Omega_*[d0,d1,...] agree.
struct EqClass {
  F2Poly p;

  bool is_zero() const { return p.is_zero(); }
  bool homogeneous(int *deg = nullptr) const { return p.homogeneous(deg); }
  int degree() const { return p.degree(); }
};

EqClass eq_zero(const Model &m);
EqClass eq_one(const Model &m);
EqClass eq_xgen(const Model &m, int g);       // the generator x_g
EqClass eq_dgen(const Model &m, int i, int j);
EqClass eq_add(const EqClass &a, const EqClass &b);
EqClass eq_mul(const Model &m, const EqClass &a, const EqClass &b);

// [Gamma^j of the twisted projective space of dimension mdim]: zero for
// mdim = 1, the generator d(mdim-1, j) for mdim >= 2.
EqClass twisted_projective(const Model &m, int mdim, int j);

// The embedding into Omega_*[d0,d1,...] (geometric fixed points).
F2Poly geometric_fixed(const Model &m, const EqClass &c);

bool eq_equal(const Model &m, const EqClass &a, const EqClass &b);

// Restriction to the underlying cobordism class: d(i,j) -> c_{i,j}.
F2Poly eq_restrict(const Model &m, const EqClass &c);        // over B
F2Poly eq_restrict_x(const Model &m, const EqClass &c);      // over eq table

// The transfer is zero.
EqClass transfer(const Model &m, const F2Poly &omega_elt);

// Image in Omega_*[[e]]: d(i,j) -> sum_{l<=K} c_{i,j+l} e^l, window [0,K].
ESeries homotopy_fixed(const Model &m, const EqClass &c, int K);

// Coefficient list of homotopy_fixed: entry n is the underlying class of the
// n-th Conner-Floyd iterate.
std::vector<F2Poly> gamma_underlying_series(const Model &m, const EqClass &c,
                                            int K);

// The defining relation (d(i,j)+c_{i,j}) d(k,l+1) + d(i,j+1) (d(k,l)+c_{k,l})
// as a polynomial over the eq table.
F2Poly relation_poly(const Model &m, int i, int j, int k, int l);
// All distinct relations with every index inside the degree-maxDegree range.
std::vector<F2Poly> relation_list(const Model &m, int maxDegree);

// Dimension of degree n in the presented ring (quotient by the relations).
int dim_presented(const Model &m, int n);
// Rank of the embedded images of all degree-n monomials.
int dim_image(const Model &m, int n);

// Preimage of an element of Omega_*[d0,...] under the embedding, if any.
std::optional<EqClass> membership(const Model &m, const F2Poly &phi_elt);

} // namespace cobord

#endif
