#include <doctest.h>

#include "cobord/omega.hpp"
#include "test_util.hpp"

using namespace cobord;
using cobord::testutil::bvar;
using cobord::testutil::model;

TEST_CASE("partition count with the two-power-minus-one parts removed") {
  auto ex = is_twopower_minus_one;
  CHECK(partition_count(0, ex) == 1);
  CHECK(partition_count(1, ex) == 0);
  CHECK(partition_count(2, ex) == 1);
  CHECK(partition_count(3, ex) == 0);
  CHECK(partition_count(4, ex) == 2); // {4}, {2,2}
  CHECK(partition_count(7, ex) == 1); // {5,2}
  // no exclusions: ordinary partition numbers
  auto none = [](int) { return false; };
  CHECK(partition_count(5, none) == 7);
  CHECK(partition_count(10, none) == 42);
}

TEST_CASE("ring dimensions match the partition oracle") {
  const Model &m = model();
  const OmegaBasis &om = m.omega();
  for (int n = 0; n <= m.Nctx(); ++n)
    CHECK(om.dim(n) == partition_count(n, is_twopower_minus_one));
  CHECK(om.dim(0) == 1);
  CHECK(om.dim(1) == 0);
  CHECK(om.dim(4) == 2);
}

TEST_CASE("generator choice is the expected greedy one") {
  const Model &m = model();
  const OmegaBasis &om = m.omega();
  const auto *x2 = om.generator_in_degree(2);
  REQUIRE(x2 != nullptr);
  CHECK(x2->a_index == std::pair<int, int>{1, 2});
  CHECK(x2->repr == m.fgl().a(1, 2));
  CHECK(om.generator_in_degree(3) == nullptr);
  CHECK(om.generator_in_degree(7) == nullptr);
  CHECK(om.generator_in_degree(6) != nullptr);
  // exactly one new generator per admissible degree
  for (const auto &gen : om.generators())
    CHECK(!is_twopower_minus_one(gen.degree));
}

TEST_CASE("express recovers generator expressions") {
  const Model &m = model();
  const OmegaBasis &om = m.omega();
  const auto *x2 = om.generator_in_degree(2);
  REQUIRE(x2 != nullptr);

  auto e1 = om.express(x2->repr);
  REQUIRE(e1.has_value());
  CHECK(render(*e1) == "x(2)");

  F2Poly sq = poly_mul(x2->repr, x2->repr, TruncCtx{m.Nctx()});
  auto e2 = om.express(sq);
  REQUIRE(e2.has_value());
  CHECK(render(*e2) == "x(2)^2");

  CHECK(!om.express(bvar(m.B(), 1)).has_value()); // b1 is not in the ring
  CHECK_THROWS_AS(om.express_or_throw(bvar(m.B(), 1)), NotInSubring);

  // round-trip through eval_x on all basis elements in low degrees
  for (int n = 0; n <= 6; ++n)
    for (const F2Poly &w : om.basis(n)) {
      auto x = om.express(w);
      REQUIRE(x.has_value());
      CHECK(om.eval_x(*x) == w);
    }
}

TEST_CASE("express validates input") {
  const Model &m = model();
  F2Poly mixed = poly_add(bvar(m.B(), 1), bvar(m.B(), 2));
  CHECK_THROWS(m.omega().express(mixed)); // inhomogeneous
}
