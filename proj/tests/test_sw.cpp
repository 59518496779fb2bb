#include <doctest.h>

#include "cobord/sw.hpp"
#include "test_util.hpp"

using namespace cobord;
using cobord::testutil::model;

TEST_CASE("projective plane has both degree-2 numbers") {
  SwProfile p = sw_numbers_projective_product({2});
  CHECK(p.n == 2);
  CHECK(p.values.at({2}) == 1);     // w_2
  CHECK(p.values.at({1, 1}) == 1);  // w_1^2
}

TEST_CASE("one- and three-dimensional projective spaces bound") {
  CHECK(sw_numbers_projective_product({1}).all_zero());
  CHECK(sw_numbers_projective_product({3}).all_zero());
}

TEST_CASE("partitions are complete keys") {
  SwProfile p = sw_numbers_projective_product({2, 2});
  CHECK(p.n == 4);
  CHECK(p.values.size() == partitions_of(4).size());
}

TEST_CASE("class pairing matches the projective plane") {
  const Model &m = model();
  // the restriction of the first twisted class is the projective plane
  SwProfile fromClass = sw_numbers_of_class(m.fgl().c(1, 0), 2, m.omega());
  SwProfile fromManifold = sw_numbers_projective_product({2});
  CHECK(fromClass == fromManifold);
}

TEST_CASE("pairing on products of projective planes") {
  const Model &m = model();
  TruncCtx t{m.Nctx()};
  F2Poly sq = poly_mul(m.fgl().c(1, 0), m.fgl().c(1, 0), t);
  SwProfile fromClass = sw_numbers_of_class(sq, 4, m.omega());
  SwProfile fromManifold = sw_numbers_projective_product({2, 2});
  CHECK(fromClass == fromManifold);
}

TEST_CASE("linearity and the point class") {
  const Model &m = model();
  F2Poly c = m.fgl().c(1, 0);
  SwProfile zero = sw_numbers_of_class(poly_add(c, c), 2, m.omega());
  CHECK(zero.all_zero());

  SwProfile point = sw_numbers_of_class(F2Poly::one(m.B()), 0, m.omega());
  CHECK(point.values.at({}) == 1);
}

TEST_CASE("classes outside the ring are rejected") {
  const Model &m = model();
  CHECK_THROWS_AS(sw_numbers_of_class(F2Poly::var(m.B(), 0), 1, m.omega()),
                  NotInSubring);
}
