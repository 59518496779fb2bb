#ifndef COBORD_EXPR_HPP
#define COBORD_EXPR_HPP

#include <memory>
#include <string>

#include "cobord/extended.hpp"

namespace cobord {

// Grammar: expr := term ('+' term)*; term := factor ('*' factor)*;
// factor := atom ('^' int)?; atom := 0 | 1 | a | u | d(i,j) | x(g)
//         | RPs(m,j) | Gamma(expr) | '(' expr ')'.
struct ClassExpr {
  enum Kind { Zero, One, A, U, DGen, XGen, RPs, Add, Mul, Pow, Gamma } kind;
  int arg0 = 0, arg1 = 0; // indices / exponent
  std::shared_ptr<ClassExpr> lhs, rhs;
};

using ClassExprPtr = std::shared_ptr<ClassExpr>;

ClassExprPtr parse_expr(const std::string &text); // throws ParseError
std::string render_expr(const ClassExpr &e);

// Thrown for well-formed expressions that do not denote a class (unknown
// generator, Gamma of an extended class, bigrading mismatch, ...).
struct EvalError : Error {
  explicit EvalError(const std::string &msg) : Error(msg) {}
};

// Either a plain equivariant class or an extended one.
struct EvalValue {
  bool extended = false;
  EqClass eq;
  ExtClass ext;
};

EvalValue eval_expr(const Model &m, const ClassExpr &e);

// Rendering of evaluated classes in the canonical form.
std::string render_eq(const Model &m, const EqClass &c);
std::string render_ext(const Model &m, const ExtClass &x);
std::string render_eseries(const ESeries &s);
std::string render_omega_u(const Model &m, const OmegaU &w);

} // namespace cobord

#endif
