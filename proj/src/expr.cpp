#include "cobord/expr.hpp"

#include <cctype>

namespace cobord {

namespace {

struct Parser {
  const std::string &s;
  size_t pos = 0;

  explicit Parser(const std::string &text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos)
      throw ParseError("expected integer", pos);
    return std::stoi(s.substr(start, pos - start));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos]))))
      ++pos;
    return s.substr(start, pos - start);
  }

  ClassExprPtr atom() {
    skip_ws();
    if (pos >= s.size())
      throw ParseError("unexpected end of input", pos);
    if (eat('(')) {
      ClassExprPtr e = expr();
      expect(')');
      return e;
    }
    size_t at = pos;
    std::string id = ident();
    if (id.empty())
      throw ParseError("expected atom", pos);
    auto node = [&](ClassExpr::Kind k) {
      auto e = std::make_shared<ClassExpr>();
      e->kind = k;
      return e;
    };
    if (id == "0")
      return node(ClassExpr::Zero);
    if (id == "1")
      return node(ClassExpr::One);
    if (id == "a")
      return node(ClassExpr::A);
    if (id == "u")
      return node(ClassExpr::U);
    if (id == "d" || id == "x" || id == "RPs") {
      expect('(');
      int first = integer();
      auto e = std::make_shared<ClassExpr>();
      if (id == "x") {
        e->kind = ClassExpr::XGen;
        e->arg0 = first;
      } else {
        expect(',');
        int second = integer();
        e->kind = id == "d" ? ClassExpr::DGen : ClassExpr::RPs;
        e->arg0 = first;
        e->arg1 = second;
      }
      expect(')');
      return e;
    }
    if (id == "Gamma") {
      expect('(');
      auto e = std::make_shared<ClassExpr>();
      e->kind = ClassExpr::Gamma;
      e->lhs = expr();
      expect(')');
      return e;
    }
    throw ParseError("unknown atom '" + id + "'", at);
  }

  ClassExprPtr factor() {
    ClassExprPtr base = atom();
    skip_ws();
    if (eat('^')) {
      int k = integer();
      if (k < 0)
        throw ParseError("exponent must be >= 0", pos);
      auto e = std::make_shared<ClassExpr>();
      e->kind = ClassExpr::Pow;
      e->lhs = base;
      e->arg0 = k;
      return e;
    }
    return base;
  }

  ClassExprPtr term() {
    ClassExprPtr acc = factor();
    while (true) {
      skip_ws();
      if (!eat('*'))
        return acc;
      auto e = std::make_shared<ClassExpr>();
      e->kind = ClassExpr::Mul;
      e->lhs = acc;
      e->rhs = factor();
      acc = e;
    }
  }

  ClassExprPtr expr() {
    ClassExprPtr acc = term();
    while (true) {
      skip_ws();
      if (!eat('+'))
        return acc;
      auto e = std::make_shared<ClassExpr>();
      e->kind = ClassExpr::Add;
      e->lhs = acc;
      e->rhs = term();
      acc = e;
    }
  }
};

int precedence(ClassExpr::Kind k) {
  switch (k) {
  case ClassExpr::Add:
    return 1;
  case ClassExpr::Mul:
    return 2;
  case ClassExpr::Pow:
    return 3;
  default:
    return 4;
  }
}

void render_into(const ClassExpr &e, std::string &out) {
  auto child = [&](const ClassExpr &c, int minPrec) {
    if (precedence(c.kind) < minPrec) {
      out += '(';
      render_into(c, out);
      out += ')';
    } else {
      render_into(c, out);
    }
  };
  switch (e.kind) {
  case ClassExpr::Zero:
    out += '0';
    break;
  case ClassExpr::One:
    out += '1';
    break;
  case ClassExpr::A:
    out += 'a';
    break;
  case ClassExpr::U:
    out += 'u';
    break;
  case ClassExpr::DGen:
    out += "d(" + std::to_string(e.arg0) + "," + std::to_string(e.arg1) + ")";
    break;
  case ClassExpr::XGen:
    out += "x(" + std::to_string(e.arg0) + ")";
    break;
  case ClassExpr::RPs:
    out +=
        "RPs(" + std::to_string(e.arg0) + "," + std::to_string(e.arg1) + ")";
    break;
  case ClassExpr::Add:
    child(*e.lhs, 1);
    out += " + ";
    child(*e.rhs, 2);
    break;
  case ClassExpr::Mul:
    child(*e.lhs, 2);
    out += "*";
    child(*e.rhs, 3);
    break;
  case ClassExpr::Pow:
    child(*e.lhs, 4);
    out += "^" + std::to_string(e.arg0);
    break;
  case ClassExpr::Gamma:
    out += "Gamma(";
    render_into(*e.lhs, out);
    out += ")";
    break;
  }
}

} // namespace

ClassExprPtr parse_expr(const std::string &text) {
  Parser p(text);
  ClassExprPtr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input", p.pos);
  return e;
}

std::string render_expr(const ClassExpr &e) {
  std::string out;
  render_into(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

EvalValue make_eq(EqClass c) { return {false, std::move(c), {}}; }

EvalValue make_ext(const Model &m, ExtClass x) {
  if (x.s == 0)
    return make_eq(x.m);
  return {true, eq_zero(m), std::move(x)};
}

ExtClass promote(const Model &m, const EvalValue &v) {
  if (v.extended)
    return v.ext;
  return ext_from(m, 0, 0, v.eq);
}

EvalValue add_values(const Model &m, const EvalValue &a, const EvalValue &b) {
  if (!a.extended && !b.extended)
    return make_eq(eq_add(a.eq, b.eq));
  if (!a.extended && a.eq.is_zero())
    return b;
  if (!b.extended && b.eq.is_zero())
    return a;
  return make_ext(m, ext_add(m, promote(m, a), promote(m, b)));
}

EvalValue mul_values(const Model &m, const EvalValue &a, const EvalValue &b) {
  if (!a.extended && !b.extended)
    return make_eq(eq_mul(m, a.eq, b.eq));
  return make_ext(m, ext_mul(m, promote(m, a), promote(m, b)));
}

} // namespace

EvalValue eval_expr(const Model &m, const ClassExpr &e) {
  switch (e.kind) {
  case ClassExpr::Zero:
    return make_eq(eq_zero(m));
  case ClassExpr::One:
    return make_eq(eq_one(m));
  case ClassExpr::A: {
    ExtClass a = ext_from(m, 1, 0, eq_one(m));
    return make_ext(m, std::move(a));
  }
  case ClassExpr::U: {
    ExtClass u = ext_from(m, 0, 1, eq_one(m));
    return make_ext(m, std::move(u));
  }
  case ClassExpr::DGen:
    if (e.arg0 < 1 || e.arg1 < 0)
      throw EvalError("d(i,j) needs i >= 1 and j >= 0");
    return make_eq(eq_dgen(m, e.arg0, e.arg1));
  case ClassExpr::XGen: {
    if (e.arg0 > m.Nd())
      throw TruncationExceeded("x(" + std::to_string(e.arg0) +
                               ") beyond generator range");
    if (m.eq_xvar(e.arg0) < 0)
      throw EvalError("no generator in degree " + std::to_string(e.arg0));
    return make_eq(eq_xgen(m, e.arg0));
  }
  case ClassExpr::RPs:
    return make_eq(twisted_projective(m, e.arg0, e.arg1));
  case ClassExpr::Add:
    return add_values(m, eval_expr(m, *e.lhs), eval_expr(m, *e.rhs));
  case ClassExpr::Mul:
    return mul_values(m, eval_expr(m, *e.lhs), eval_expr(m, *e.rhs));
  case ClassExpr::Pow: {
    EvalValue base = eval_expr(m, *e.lhs);
    EvalValue acc = make_eq(eq_one(m));
    for (int i = 0; i < e.arg0; ++i)
      acc = mul_values(m, acc, base);
    return acc;
  }
  case ClassExpr::Gamma: {
    EvalValue v = eval_expr(m, *e.lhs);
    if (v.extended)
      throw EvalError("Gamma applies to plain classes only");
    return make_eq(gamma(m, v.eq));
  }
  }
  throw Error("eval_expr: unreachable");
}

// ---------------------------------------------------------------------------
// Rendering of values
// ---------------------------------------------------------------------------

std::string render_eq(const Model &, const EqClass &c) { return render(c.p); }

std::string render_ext(const Model &, const ExtClass &x) {
  if (x.is_zero())
    return "0";
  std::string out;
  auto append = [&](const std::string &piece) {
    if (!out.empty())
      out += " + ";
    out += piece;
  };
  for (int j = 0; j < x.s; ++j) {
    if (x.lambda[j].is_zero())
      continue;
    std::string coeff = render(x.lambda[j]);
    if (coeff != "1")
      coeff = "(" + coeff + ")*";
    else
      coeff.clear();
    std::string apart =
        j == 0 ? "" : (j == 1 ? "a*" : "a^" + std::to_string(j) + "*");
    int up = x.s - j;
    std::string upart = up == 1 ? "u" : "u^" + std::to_string(up);
    append(coeff + apart + upart);
  }
  if (!x.m.is_zero()) {
    std::string apart =
        x.s == 0 ? "" : (x.s == 1 ? "a*" : "a^" + std::to_string(x.s) + "*");
    std::string mm = render(x.m.p);
    if (x.s > 0 && x.m.p.term_count() > 1)
      mm = "(" + mm + ")";
    append(x.s == 0 ? mm : apart + mm);
  }
  return out;
}

std::string render_eseries(const ESeries &s) {
  std::string out;
  for (int j = s.lo(); j <= s.hi(); ++j) {
    if (s.coeff(j).is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    std::string c = render(s.coeff(j));
    if (j == 0) {
      out += c;
      continue;
    }
    if (s.coeff(j).term_count() > 1 || c == "1") {
      if (c == "1")
        c.clear();
      else
        c = "(" + c + ")*";
    } else {
      c += "*";
    }
    out += c + (j == 1 ? "e" : "e^" + std::to_string(j));
  }
  return out.empty() ? "0" : out;
}

std::string render_omega_u(const Model &, const OmegaU &w) {
  if (w.coeff.is_zero())
    return "0";
  std::string c = render(w.coeff);
  if (w.upow == 0)
    return c;
  std::string up = w.upow == 1 ? "u" : "u^" + std::to_string(w.upow);
  if (w.coeff.is_one())
    return up;
  if (w.coeff.term_count() > 1)
    return "(" + c + ")*" + up;
  return c + "*" + up;
}

} // namespace cobord
