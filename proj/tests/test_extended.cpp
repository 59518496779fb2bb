#include <doctest.h>

#include "cobord/extended.hpp"
#include "test_util.hpp"

using namespace cobord;
using cobord::testutil::model;

TEST_CASE("the Conner-Floyd operation on generators and products") {
  const Model &m = model();
  CHECK(gamma(m, eq_one(m)).is_zero());
  CHECK(gamma(m, eq_zero(m)).is_zero());
  CHECK(eq_equal(m, gamma(m, eq_dgen(m, 1, 0)), eq_dgen(m, 1, 1)));
  CHECK(eq_equal(m, gamma(m, eq_dgen(m, 2, 1)), eq_dgen(m, 2, 2)));
  // coefficients pass through
  CHECK(gamma(m, eq_xgen(m, 2)).is_zero());
  EqClass mixed = eq_mul(m, eq_xgen(m, 2), eq_dgen(m, 1, 0));
  CHECK(eq_equal(m, gamma(m, mixed),
                 eq_mul(m, eq_xgen(m, 2), eq_dgen(m, 1, 1))));

  // product rule: gamma(d(1,0) d(2,0)) = c(1,0) d(2,1) + d(1,1) d(2,0)
  EqClass prod = eq_mul(m, eq_dgen(m, 1, 0), eq_dgen(m, 2, 0));
  EqClass expect = eq_add(eq_mul(m, {m.cx(1, 0)}, eq_dgen(m, 2, 1)),
                          eq_mul(m, eq_dgen(m, 1, 1), eq_dgen(m, 2, 0)));
  CHECK(eq_equal(m, gamma(m, prod), expect));
}

TEST_CASE("the u-splitting") {
  const Model &m = model();
  USplit s1 = push_u(m, eq_one(m));
  CHECK(s1.restrict_x.is_one());
  CHECK(s1.gamma_part.is_zero());

  USplit s2 = push_u(m, eq_dgen(m, 1, 0));
  CHECK(s2.restrict_x == m.cx(1, 0));
  CHECK(eq_equal(m, s2.gamma_part, eq_dgen(m, 1, 1)));

  USplit s3 = push_u(m, eq_xgen(m, 2));
  CHECK(s3.restrict_x == eq_xgen(m, 2).p);
  CHECK(s3.gamma_part.is_zero());
}

TEST_CASE("building extended classes") {
  const Model &m = model();
  // a^2 is already normal
  ExtClass a2 = ext_from(m, 2, 0, eq_one(m));
  CHECK(a2.s == 2);
  CHECK(a2.t == 0);
  CHECK(a2.lambda[0].is_zero());
  CHECK(a2.lambda[1].is_zero());
  CHECK(a2.m.p.is_one());

  // u d(1,0) = c(1,0) u + d(1,1) a
  ExtClass ud = ext_from(m, 0, 1, eq_dgen(m, 1, 0));
  CHECK(ud.s == 1);
  CHECK(ud.t == 3);
  CHECK(ud.lambda[0] == m.cx(1, 0));
  CHECK(eq_equal(m, ud.m, eq_dgen(m, 1, 1)));

  // u^2 d(1,0) = c(1,0) u^2 + c(1,1) u a + d(1,2) a^2
  ExtClass u2d = ext_from(m, 0, 2, eq_dgen(m, 1, 0));
  CHECK(u2d.lambda[0] == m.cx(1, 0));
  CHECK(u2d.lambda[1] == m.cx(1, 1));
  CHECK(eq_equal(m, u2d.m, eq_dgen(m, 1, 2)));

  // a * (u-free class) is normal as given
  ExtClass am = ext_from(m, 1, 0, eq_dgen(m, 2, 0));
  CHECK(am.lambda[0].is_zero());
  CHECK(eq_equal(m, am.m, eq_dgen(m, 2, 0)));

  CHECK_THROWS(ext_from(m, 0, 1, {poly_add(eq_one(m).p,
                                           eq_dgen(m, 1, 0).p)}));
}

TEST_CASE("extended multiplication") {
  const Model &m = model();
  ExtClass a = ext_from(m, 1, 0, eq_one(m));
  ExtClass u = ext_from(m, 0, 1, eq_one(m));

  ExtClass au = ext_mul(m, a, u);
  ExtClass ua = ext_mul(m, u, a);
  CHECK(ext_equal(m, au, ua));
  CHECK(au.s == 2);
  CHECK(au.t == 1);

  // u^2 * d(1,0) through repeated products matches the direct normal form
  ExtClass d = ext_from(m, 0, 0, eq_dgen(m, 1, 0));
  ExtClass prod = ext_mul(m, u, ext_mul(m, u, d));
  ExtClass direct = ext_from(m, 0, 2, eq_dgen(m, 1, 0));
  CHECK(ext_equal(m, prod, direct));

  // (a m)(a m') = a^2 m m'
  ExtClass am = ext_from(m, 1, 0, eq_dgen(m, 1, 0));
  ExtClass am2 = ext_from(m, 1, 0, eq_dgen(m, 2, 0));
  ExtClass both = ext_mul(m, am, am2);
  CHECK(both.s == 2);
  CHECK(both.lambda[0].is_zero());
  CHECK(both.lambda[1].is_zero());
  CHECK(eq_equal(m, both.m, eq_mul(m, eq_dgen(m, 1, 0), eq_dgen(m, 2, 0))));

  CHECK_THROWS_AS(ext_mul(m, ext_from(m, 0, 0, eq_dgen(m, 1, 5)),
                          ext_from(m, 0, 0, eq_dgen(m, 1, 6))),
                  TruncationExceeded);
}

TEST_CASE("restriction to the u-polynomial ring") {
  const Model &m = model();
  ExtClass a = ext_from(m, 1, 0, eq_one(m));
  ExtClass u = ext_from(m, 0, 1, eq_one(m));
  CHECK(ext_restrict(m, a).coeff.is_zero());
  OmegaU ru = ext_restrict(m, u);
  CHECK(ru.coeff.is_one());
  CHECK(ru.upow == 1);

  ExtClass ud = ext_mul(m, u, ext_from(m, 0, 0, eq_dgen(m, 1, 0)));
  OmegaU r = ext_restrict(m, ud);
  CHECK(r.coeff == m.cx(1, 0));
  CHECK(r.upow == 1);

  // transfer is zero
  CHECK(ext_transfer(m, r).is_zero());
}

TEST_CASE("the normalized fixed-point image") {
  const Model &m = model();
  ExtClass a = ext_from(m, 1, 0, eq_one(m));
  CHECK(ext_phi(m, a).is_one());

  ExtClass u = ext_from(m, 0, 1, eq_one(m));
  CHECK(ext_phi(m, u) ==
        F2Poly::var(m.phiTable(), m.phi_dvar(0))); // u -> d0

  ExtClass ud = ext_mul(m, u, ext_from(m, 0, 0, eq_dgen(m, 1, 0)));
  F2Poly expect = poly_mul_monomial(geometric_fixed(m, eq_dgen(m, 1, 0)),
                                    Monomial::var(m.phi_dvar(0)),
                                    TruncCtx{m.Nctx()});
  CHECK(ext_phi(m, ud) == expect);

  // u(d(i,j)+c(i,j)) + a d(i,j+1) dies for every index pair in range
  for (int i = 1; i + 2 <= m.Nd(); ++i)
    for (int j = 0; i + j + 2 <= m.Nd(); ++j) {
      EqClass inner = eq_add(eq_dgen(m, i, j), {m.cx(i, j)});
      F2Poly img = poly_add(
          ext_phi(m, ext_mul(m, u, ext_from(m, 0, 0, inner))),
          ext_phi(m, ext_mul(m, a, ext_from(m, 0, 0,
                                            eq_dgen(m, i, j + 1)))));
      CHECK(img.is_zero());
    }
}

TEST_CASE("Leibniz rule for the operation") {
  const Model &m = model();
  EqClass x = eq_dgen(m, 1, 0);
  EqClass y = eq_mul(m, eq_xgen(m, 2), eq_dgen(m, 1, 1));
  EqClass lhs = gamma(m, eq_mul(m, x, y));
  EqClass rhs = eq_add(eq_mul(m, {eq_restrict_x(m, x)}, gamma(m, y)),
                       eq_mul(m, gamma(m, x), y));
  CHECK(eq_equal(m, lhs, rhs));
}
