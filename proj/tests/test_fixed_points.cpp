#include <doctest.h>

#include "cobord/equivariant.hpp"
#include "cobord/fixed_points.hpp"
#include "test_util.hpp"

using namespace cobord;
using cobord::testutil::model;

TEST_CASE("phi rows and the map to the Tate ring") {
  const Model &m = model();
  ESeries d0 = m.phi_row(0);
  CHECK(d0.coeff(-1).is_one());
  for (int j = 0; j <= d0.hi(); ++j)
    CHECK(d0.coeff(j).is_zero());

  ESeries d1 = m.phi_row(1);
  CHECK(d1.coeff(-2).is_one());
  CHECK(d1.coeff(-1).is_zero());
  CHECK(d1.coeff(0) == m.fgl().c(1, 0));

  F2Poly unit = F2Poly::one(m.phiTable());
  ESeries phi1 = phi_map(m, unit, -2, 2);
  CHECK(phi1.coeff(0).is_one());
  CHECK(phi1.coeff(-1).is_zero());

  // ring-map check on a product: phi(d0 * d1) = phi(d0) * phi(d1)
  F2Poly prod = poly_mul(F2Poly::var(m.phiTable(), m.phi_dvar(0)),
                         F2Poly::var(m.phiTable(), m.phi_dvar(1)),
                         TruncCtx{m.Nctx()});
  ESeries lhs = phi_map(m, prod, -3, 2);
  ESeries rhs = eseries_mul(m.phi_row(0), m.phi_row(1), TruncCtx{m.Nctx()});
  for (int j = -3; j <= 2; ++j)
    CHECK(lhs.coeff(j) == rhs.coeff(j));

  // phi(d0 * p) = e^{-1} phi(p)
  F2Poly p = F2Poly::var(m.phiTable(), m.phi_dvar(1));
  ESeries shifted = phi_map(
      m, poly_mul(F2Poly::var(m.phiTable(), m.phi_dvar(0)), p,
                  TruncCtx{m.Nctx()}),
      -3, 2);
  ESeries direct = eseries_shift(phi_map(m, p, -2, 3), -1);
  for (int j = -3; j <= 2; ++j)
    CHECK(shifted.coeff(j) == direct.coeff(j));
}

TEST_CASE("phi after the embedding is the e-expansion up to interior rows") {
  // phi(eps(d(i,j))) = hfp(d(i,j)) + sum_{-i-1<m<0} c(i,m) e^{m-j}: the
  // correction is carried entirely by the interior negative entries of the
  // reciprocal table (zero for i = 1, nonzero from i = 2 on).
  const Model &m = model();
  for (auto [i, j] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 1}}) {
    F2Poly eps = m.eps_d(i, j);
    int K = m.Nctx() - (i + j + 1) - 1;
    ESeries viaPhi = phi_map(m, eps, -(i + j + 2), K);
    ESeries viaHfp = homotopy_fixed(m, eq_dgen(m, i, j), K);
    for (int l = 0; l <= K; ++l)
      CHECK(viaPhi.coeff(l) == viaHfp.coeff(l));
    for (int l = viaPhi.lo(); l < 0; ++l) {
      int mexp = l + j;
      F2Poly want = (mexp > -i - 1 && mexp < 0) ? m.fgl().c(i, mexp)
                                                : F2Poly::zero(m.B());
      CHECK(viaPhi.coeff(l) == want);
    }
  }
  // for the first row the correction vanishes identically
  ESeries neg = phi_map(m, m.eps_d(1, 1), -4, -1);
  CHECK(neg.is_zero());
}

TEST_CASE("normal form rewriting") {
  const Model &m = model();
  const int e = m.r_evar();
  TruncCtx t{2 * m.Nctx()};

  // e*d(1,1) -> d(1,0) + c(1,0)
  F2Poly ed11 = poly_mul_monomial(m.eq_to_r(eq_dgen(m, 1, 1).p),
                                  Monomial::var(e), t);
  RElem nf = r_normal_form(m, ed11);
  CHECK(nf.f1.is_zero());
  CHECK(nf.f0 == poly_add(eq_dgen(m, 1, 0).p, m.cx(1, 0)));

  // e*d(1,0) stays in the f1 part
  F2Poly ed10 = poly_mul_monomial(m.eq_to_r(eq_dgen(m, 1, 0).p),
                                  Monomial::var(e), t);
  RElem nf2 = r_normal_form(m, ed10);
  CHECK(nf2.f0.is_zero());
  CHECK(nf2.f1 == m.eq_to_r(eq_dgen(m, 1, 0).p));

  // already normal input is untouched
  RElem nf3 = r_normal_form(m, m.eq_to_r(eq_dgen(m, 1, 1).p));
  CHECK(nf3.f0 == eq_dgen(m, 1, 1).p);
  CHECK(nf3.f1.is_zero());

  CHECK(r_is_normal(m, nf.whole(m)));
  CHECK(r_is_normal(m, nf2.whole(m)));
  CHECK(!r_is_normal(m, ed11));
}

TEST_CASE("R equality through the faithful coordinates") {
  const Model &m = model();
  const int e = m.r_evar();
  TruncCtx t{2 * m.Nctx()};

  F2Poly ed11 = poly_mul_monomial(m.eq_to_r(eq_dgen(m, 1, 1).p),
                                  Monomial::var(e), t);
  RElem lhs = r_normal_form(m, ed11);
  RElem rhs{poly_add(eq_dgen(m, 1, 0).p, m.cx(1, 0)),
            F2Poly::zero(m.rTable())};
  CHECK(r_equal(m, lhs, rhs));

  RElem d10{eq_dgen(m, 1, 0).p, F2Poly::zero(m.rTable())};
  RElem other{poly_add(eq_dgen(m, 2, 0).p, eq_xgen(m, 2).p),
              F2Poly::zero(m.rTable())};
  CHECK(!r_equal(m, d10, other));

  RElem one{eq_one(m).p, F2Poly::zero(m.rTable())};
  RElem oneplus{poly_add(eq_one(m).p, eq_zero(m).p),
                F2Poly::zero(m.rTable())};
  CHECK(r_equal(m, one, oneplus));
  RElem zero{eq_zero(m).p, F2Poly::zero(m.rTable())};
  CHECK(!r_equal(m, one, zero)); // r != r + 1
}

TEST_CASE("multiplication by e is injective on windowed slices") {
  const Model &m = model();
  for (int n = 0; n <= 4; ++n) {
    ERegReport rep = check_e_regular(m, n, 2);
    CHECK(rep.ok());
    CHECK(rep.slice_dim > 0);
  }
}

TEST_CASE("a fake relation breaks e-regularity") {
  const Model &m = model();
  RewritePolicy fake;
  fake.fake_kill_ed10 = true;
  ERegReport rep = check_e_regular(m, 2, 2, fake);
  CHECK(!rep.ok());
  CHECK(rep.e_rank < rep.embed_rank);
}

TEST_CASE("tate square verification in low degrees") {
  const Model &m = model();
  TateReport r0 = check_tate_square(m, 0, 2);
  CHECK(r0.surjective);
  CHECK(r0.kernel_dim == 1);
  CHECK(r0.stable);

  TateReport r2 = check_tate_square(m, 2, 4);
  CHECK(r2.surjective);
  CHECK(r2.kernel_dim == 2);
  CHECK(r2.kernel_dim == dim_image(m, 2));
  CHECK(r2.stable);

  TateReport r3 = check_tate_square(m, 3, 5);
  CHECK(r3.surjective);
  CHECK(r3.kernel_dim == dim_image(m, 3));
}

TEST_CASE("window too large for the context is refused") {
  const Model &m = model();
  CHECK_THROWS_AS(check_tate_square(m, m.N(), m.Nctx()), WindowInsufficient);
}
