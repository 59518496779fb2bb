#include <doctest.h>

#include <random>

#include "cobord/expr.hpp"
#include "cobord/verify.hpp"
#include "test_util.hpp"

using namespace cobord;
using cobord::testutil::model;

TEST_CASE("parsing well-formed expressions") {
  auto e1 = parse_expr("RPs(3,0) * RPs(2,1)");
  CHECK(e1->kind == ClassExpr::Mul);
  CHECK(e1->lhs->kind == ClassExpr::RPs);

  auto e2 = parse_expr("u*(d(1,0) + x(2))");
  CHECK(e2->kind == ClassExpr::Mul);
  CHECK(e2->lhs->kind == ClassExpr::U);
  CHECK(e2->rhs->kind == ClassExpr::Add);

  auto e3 = parse_expr("Gamma(d(1,0))^2 + 1");
  CHECK(e3->kind == ClassExpr::Add);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_expr("d(1)"), ParseError);
  CHECK_THROWS_AS(parse_expr("q(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_expr("d(1,0) +"), ParseError);
  CHECK_THROWS_AS(parse_expr("(d(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_expr("d(1,0))"), ParseError);
}

namespace {

ClassExprPtr random_ast(std::mt19937_64 &rng, int depth) {
  auto node = std::make_shared<ClassExpr>();
  int pick = depth <= 0 ? static_cast<int>(rng() % 6)
                        : static_cast<int>(rng() % 10);
  switch (pick) {
  case 0:
    node->kind = ClassExpr::Zero;
    break;
  case 1:
    node->kind = ClassExpr::One;
    break;
  case 2:
    node->kind = ClassExpr::A;
    break;
  case 3:
    node->kind = ClassExpr::U;
    break;
  case 4:
    node->kind = ClassExpr::DGen;
    node->arg0 = 1 + static_cast<int>(rng() % 3);
    node->arg1 = static_cast<int>(rng() % 3);
    break;
  case 5:
    node->kind = ClassExpr::XGen;
    node->arg0 = 2 + static_cast<int>(rng() % 5);
    break;
  case 6:
    node->kind = ClassExpr::Add;
    node->lhs = random_ast(rng, depth - 1);
    node->rhs = random_ast(rng, depth - 1);
    break;
  case 7:
    node->kind = ClassExpr::Mul;
    node->lhs = random_ast(rng, depth - 1);
    node->rhs = random_ast(rng, depth - 1);
    break;
  case 8:
    node->kind = ClassExpr::Pow;
    node->lhs = random_ast(rng, depth - 1);
    node->arg0 = static_cast<int>(rng() % 4);
    break;
  default:
    node->kind = ClassExpr::Gamma;
    node->lhs = random_ast(rng, depth - 1);
    break;
  }
  return node;
}

bool ast_equal(const ClassExpr &a, const ClassExpr &b) {
  if (a.kind != b.kind || a.arg0 != b.arg0 || a.arg1 != b.arg1)
    return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr) ||
      (a.rhs == nullptr) != (b.rhs == nullptr))
    return false;
  if (a.lhs && !ast_equal(*a.lhs, *b.lhs))
    return false;
  if (a.rhs && !ast_equal(*a.rhs, *b.rhs))
    return false;
  return true;
}

} // namespace

TEST_CASE("render and parse are inverse on randomized ASTs") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    ClassExprPtr ast = random_ast(rng, 3);
    std::string text = render_expr(*ast);
    ClassExprPtr back = parse_expr(text);
    CHECK(ast_equal(*ast, *back));
  }
}

TEST_CASE("evaluation of the documented examples") {
  const Model &m = model();
  // the twisted line bounds
  EvalValue v1 = eval_expr(m, *parse_expr("RPs(1,0)"));
  CHECK(!v1.extended);
  CHECK(v1.eq.is_zero());
  CHECK(render_eq(m, v1.eq) == "0");

  // RPs(2,0) embeds as d0^2 + d1
  EvalValue v2 = eval_expr(m, *parse_expr("RPs(2,0)"));
  CHECK(render(geometric_fixed(m, v2.eq)) == "d0^2 + d1");

  // u*d(1,0) in normal form, coefficient expanded in the generators
  EvalValue v3 = eval_expr(m, *parse_expr("u*d(1,0)"));
  REQUIRE(v3.extended);
  CHECK(render_ext(m, v3.ext) == "(x(2))*u + a*d(1,1)");

  // powers and Gamma
  EvalValue v4 = eval_expr(m, *parse_expr("Gamma(d(1,0))"));
  CHECK(eq_equal(m, v4.eq, eq_dgen(m, 1, 1)));
  EvalValue v5 = eval_expr(m, *parse_expr("d(1,0)^2"));
  CHECK(eq_equal(m, v5.eq, eq_mul(m, eq_dgen(m, 1, 0), eq_dgen(m, 1, 0))));

  CHECK_THROWS_AS(eval_expr(m, *parse_expr("Gamma(u)")), EvalError);
  CHECK_THROWS_AS(eval_expr(m, *parse_expr("x(3)")), EvalError);
  CHECK_THROWS_AS(eval_expr(m, *parse_expr("d(9,9)")), TruncationExceeded);
}

TEST_CASE("series renderings are deterministic") {
  const Model &m = model();
  EqClass d10 = eq_dgen(m, 1, 0);
  std::string s = render_eseries(homotopy_fixed(m, d10, 2));
  CHECK(s == render_eseries(homotopy_fixed(m, d10, 2)));
  CHECK(!s.empty());
  OmegaU w{eq_xgen(m, 2).p, 2};
  CHECK(render_omega_u(m, w) == "x(2)*u^2");
}
