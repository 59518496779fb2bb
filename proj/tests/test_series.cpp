#include <doctest.h>

#include <random>

#include "cobord/fgl.hpp"
#include "test_util.hpp"

using namespace cobord;
using cobord::testutil::bvar;

namespace {

VarTablePtr b_table(int n) {
  auto t = std::make_shared<VarTable>();
  for (int i = 1; i <= n; ++i)
    t->add("b" + std::to_string(i), i);
  return t;
}

} // namespace

TEST_CASE("composition: identity, Frobenius, hand expansion") {
  auto B = b_table(4);
  TruncCtx t{8};
  UniSeries g(B, 4);
  g.set_coeff(1, F2Poly::one(B));
  g.set_coeff(2, F2Poly::one(B)); // g = x + x^2

  UniSeries id = UniSeries::x(B, 4);
  CHECK(series_compose(id, g, t) == g);

  UniSeries sq(B, 4);
  sq.set_coeff(2, F2Poly::one(B)); // f = x^2
  UniSeries comp = series_compose(sq, g, t);
  CHECK(comp.coeff(2).is_one()); // x^2
  CHECK(comp.coeff(3).is_zero());
  CHECK(comp.coeff(4).is_one()); // x^4 (characteristic 2)

  // f = g = x + x^2: f(g) = x + x^2 + (x + x^2)^2 = x + x^4
  UniSeries fg = series_compose(g, g, t);
  CHECK(fg.coeff(1).is_one());
  CHECK(fg.coeff(2).is_zero());
  CHECK(fg.coeff(3).is_zero());
  CHECK(fg.coeff(4).is_one());

  UniSeries bad(B, 4);
  bad.set_coeff(0, F2Poly::one(B));
  CHECK_THROWS(series_compose(g, bad, t));
}

TEST_CASE("reversion solves f(g) = x degreewise") {
  auto B = b_table(4);
  TruncCtx t{8};
  // f = x + b1 x^2: reversion is x + b1 x^2 + b1^3 x^4 (no x^3 term)
  UniSeries f(B, 4);
  f.set_coeff(1, F2Poly::one(B));
  f.set_coeff(2, bvar(B, 1));
  UniSeries g = series_reversion(f, t);
  CHECK(g.coeff(1).is_one());
  CHECK(g.coeff(2) == bvar(B, 1));
  CHECK(g.coeff(3).is_zero());
  CHECK(g.coeff(4) == bvar(B, 1, 3));

  UniSeries id = UniSeries::x(B, 4);
  CHECK(series_reversion(id, t) == id);

  UniSeries notmonic(B, 4);
  notmonic.set_coeff(1, bvar(B, 1));
  CHECK_THROWS(series_reversion(notmonic, t));

  // reversion of reversion returns f; f(g(x)) = x
  CHECK(series_reversion(g, t) == f);
  UniSeries fg = series_compose(f, g, t);
  CHECK(fg == id);
}

TEST_CASE("reversion postcondition on randomized series") {
  auto B = b_table(6);
  TruncCtx t{10};
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    UniSeries f(B, 6);
    f.set_coeff(1, F2Poly::one(B));
    for (int k = 2; k <= 6; ++k) {
      F2Poly c = F2Poly::zero(B);
      if (rng() % 2)
        c.toggle(Monomial::var(static_cast<int>(rng() % (k - 1))));
      f.set_coeff(k, c);
    }
    UniSeries g = series_reversion(f, t);
    CHECK(series_compose(f, g, t) == UniSeries::x(B, 6));
  }
}

TEST_CASE("ESeries windows certify multiplication") {
  auto B = b_table(3);
  TruncCtx t{6};
  ESeries a(B, -1, 3);
  a.set_coeff(-1, F2Poly::one(B));
  a.set_coeff(1, bvar(B, 2));
  ESeries b(B, 0, 2);
  b.set_coeff(0, F2Poly::one(B));
  ESeries prod = eseries_mul(a, b, t);
  CHECK(prod.lo() == -1);
  CHECK(prod.hi() == 1); // min(3+0, 2-1)
  CHECK(prod.coeff(-1).is_one());
  CHECK(prod.coeff(1) == bvar(B, 2));
  CHECK_THROWS_AS(prod.coeff(2), WindowInsufficient);
  CHECK(eseries_shift(prod, 2).lo() == 1);
  CHECK(eseries_shift(prod, 2).hi() == 3);
}

TEST_CASE("reciprocal of the group law: window pattern and low coefficients") {
  FglContext ctx = build_fgl(5);
  build_c_table(ctx);
  // c(0,-1) = 1 and the rest of row 0 vanishes
  CHECK(ctx.c(0, -1).is_one());
  for (int j = 0; j <= ctx.N - 1; ++j)
    CHECK(ctx.c(0, j).is_zero());
  // for a.{1,1} = 0 the first interior coefficient is a(2,1)
  CHECK(ctx.c(1, 0) == ctx.a(2, 1));
  CHECK(ctx.c(1, -2).is_one());
  CHECK(ctx.c(1, -1).is_zero());
  // the defining identity forces a nonzero interior negative entry: the
  // negative window is NOT concentrated at the extreme exponent
  CHECK(ctx.c(2, -3).is_one());
  CHECK(ctx.c(2, -2).is_zero());
  CHECK(ctx.c(2, -1) == ctx.c(1, 0));
  CHECK(!ctx.c(2, -1).is_zero());
  CHECK_THROWS_AS(ctx.c(0, ctx.N), WindowInsufficient);
  // the identity check runs as part of build_c_table(verify=true)
  CHECK(!recip_identity_failure(ctx.F, *ctx.recip, TruncCtx{ctx.N}));
}

TEST_CASE("invert_F rejects malformed input") {
  auto B = b_table(3);
  BivarSeries F(B, 4);
  F.set_coeff({1, 0}, F2Poly::one(B)); // e only, y term missing
  CHECK_THROWS(invert_F(F, 2, TruncCtx{4}));
}
