#include "cobord/f2poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cobord {

// ---------------------------------------------------------------------------
// VarTable
// ---------------------------------------------------------------------------

int VarTable::add(std::string name, int weight) {
  if (find(name) >= 0)
    throw Error("duplicate variable name: " + name);
  entries_.push_back({std::move(name), weight});
  return static_cast<int>(entries_.size()) - 1;
}

int VarTable::find(const std::string &name) const {
  for (size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name)
      return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial Monomial::var(int v, int exp) {
  if (exp == 0)
    return Monomial();
  return Monomial({{static_cast<uint16_t>(v), static_cast<uint16_t>(exp)}});
}

int Monomial::exponent(int v) const {
  for (const auto &[var, exp] : f_)
    if (var == v)
      return exp;
  return 0;
}

int Monomial::degree(const VarTable &t) const {
  int d = 0;
  for (const auto &[var, exp] : f_)
    d += t.weight(var) * exp;
  return d;
}

Monomial Monomial::times(const Monomial &o) const {
  std::vector<Factor> out;
  out.reserve(f_.size() + o.f_.size());
  size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first < o.f_[j].first)
      out.push_back(f_[i++]);
    else if (f_[i].first > o.f_[j].first)
      out.push_back(o.f_[j++]);
    else {
      out.push_back({f_[i].first,
                     static_cast<uint16_t>(f_[i].second + o.f_[j].second)});
      ++i, ++j;
    }
  }
  out.insert(out.end(), f_.begin() + i, f_.end());
  out.insert(out.end(), o.f_.begin() + j, o.f_.end());
  return Monomial(std::move(out));
}

bool Monomial::before(const Monomial &a, const Monomial &b, const VarTable &t) {
  int da = a.degree(t), db = b.degree(t);
  if (da != db)
    return da < db;
  // lex on ascending variable index, larger exponent first
  size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first != b.f_[j].first)
      return a.f_[i].first < b.f_[j].first;
    if (a.f_[i].second != b.f_[j].second)
      return a.f_[i].second > b.f_[j].second;
    ++i, ++j;
  }
  return i < a.f_.size();
}

// ---------------------------------------------------------------------------
// F2Poly
// ---------------------------------------------------------------------------

F2Poly F2Poly::one(VarTablePtr table) {
  F2Poly p(std::move(table));
  p.terms_.push_back(Monomial());
  return p;
}

F2Poly F2Poly::var(VarTablePtr table, int v, int exp) {
  F2Poly p(std::move(table));
  p.terms_.push_back(Monomial::var(v, exp));
  return p;
}

namespace {

// Sort and cancel monomials appearing an even number of times.
void normalize(std::vector<Monomial> &terms, const VarTable &t) {
  std::sort(terms.begin(), terms.end(),
            [&](const Monomial &a, const Monomial &b) {
              return Monomial::before(a, b, t);
            });
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (size_t i = 0; i < terms.size();) {
    size_t j = i;
    while (j < terms.size() && terms[j] == terms[i])
      ++j;
    if ((j - i) % 2)
      out.push_back(terms[i]);
    i = j;
  }
  terms.swap(out);
}

} // namespace

F2Poly F2Poly::of(VarTablePtr table, std::vector<Monomial> monomials) {
  F2Poly p(table);
  p.terms_ = std::move(monomials);
  normalize(p.terms_, *table);
  return p;
}

bool F2Poly::contains(const Monomial &m) const {
  for (const auto &t : terms_)
    if (t == m)
      return true;
  return false;
}

void F2Poly::toggle(const Monomial &m) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Monomial &a, const Monomial &b) {
                               return Monomial::before(a, b, *table_);
                             });
  if (it != terms_.end() && *it == m)
    terms_.erase(it);
  else
    terms_.insert(it, m);
}

int F2Poly::degree() const {
  if (terms_.empty())
    return 0;
  return terms_.back().degree(*table_);
}

bool F2Poly::homogeneous(int *deg_out) const {
  if (terms_.empty()) {
    if (deg_out)
      *deg_out = 0;
    return true;
  }
  int d = terms_[0].degree(*table_);
  for (const auto &m : terms_)
    if (m.degree(*table_) != d)
      return false;
  if (deg_out)
    *deg_out = d;
  return true;
}

F2Poly F2Poly::component(int degree) const {
  F2Poly out(table_);
  for (const auto &m : terms_)
    if (m.degree(*table_) == degree)
      out.terms_.push_back(m);
  return out;
}

static void check_tables(const F2Poly &p, const F2Poly &q, const char *op) {
  if (p.table().get() != q.table().get())
    throw TableMismatch(std::string("variable tables differ in ") + op);
}

F2Poly poly_add(const F2Poly &p, const F2Poly &q) {
  check_tables(p, q, "poly_add");
  const VarTable &t = *p.table();
  F2Poly out(p.table());
  out.terms_.reserve(p.terms_.size() + q.terms_.size());
  size_t i = 0, j = 0;
  while (i < p.terms_.size() && j < q.terms_.size()) {
    if (p.terms_[i] == q.terms_[j]) {
      ++i, ++j; // characteristic 2
    } else if (Monomial::before(p.terms_[i], q.terms_[j], t)) {
      out.terms_.push_back(p.terms_[i++]);
    } else {
      out.terms_.push_back(q.terms_[j++]);
    }
  }
  out.terms_.insert(out.terms_.end(), p.terms_.begin() + i, p.terms_.end());
  out.terms_.insert(out.terms_.end(), q.terms_.begin() + j, q.terms_.end());
  return out;
}

F2Poly poly_mul(const F2Poly &p, const F2Poly &q, TruncCtx t) {
  check_tables(p, q, "poly_mul");
  const VarTable &vt = *p.table();
  std::vector<Monomial> prods;
  prods.reserve(p.terms_.size() * q.terms_.size());
  for (const auto &a : p.terms_)
    for (const auto &b : q.terms_) {
      Monomial m = a.times(b);
      if (m.degree(vt) <= t.N)
        prods.push_back(std::move(m));
    }
  F2Poly out(p.table());
  out.terms_ = std::move(prods);
  normalize(out.terms_, vt);
  return out;
}

F2Poly poly_mul_monomial(const F2Poly &p, const Monomial &m, TruncCtx t) {
  const VarTable &vt = *p.table();
  F2Poly out(p.table());
  for (const auto &a : p.terms_) {
    Monomial prod = a.times(m);
    if (prod.degree(vt) <= t.N)
      out.terms_.push_back(std::move(prod));
  }
  normalize(out.terms_, vt);
  return out;
}

F2Poly poly_pow(const F2Poly &p, int k, TruncCtx t) {
  F2Poly acc = F2Poly::one(p.table());
  for (int i = 0; i < k; ++i)
    acc = poly_mul(acc, p, t);
  return acc;
}

// ---------------------------------------------------------------------------
// Rendering and parsing
// ---------------------------------------------------------------------------

std::string render(const Monomial &m, const VarTable &t) {
  if (m.is_one())
    return "1";
  std::string s;
  for (const auto &[var, exp] : m.factors()) {
    if (!s.empty())
      s += '*';
    s += t.name(var);
    if (exp > 1) {
      s += '^';
      s += std::to_string(exp);
    }
  }
  return s;
}

std::string render(const F2Poly &p) {
  if (p.is_zero())
    return "0";
  std::string s;
  for (const auto &m : p.terms()) {
    if (!s.empty())
      s += " + ";
    s += render(m, *p.table());
  }
  return s;
}

F2Poly parse_poly(const std::string &text, const VarTablePtr &table) {
  std::vector<Monomial> terms;
  size_t pos = 0;
  auto fail = [&](const std::string &why) {
    throw ParseError("polynomial: " + why, pos);
  };
  while (pos < text.size()) {
    size_t end = text.find(" + ", pos);
    std::string term = text.substr(
        pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term == "0") {
      if (!terms.empty() || end != std::string::npos)
        fail("stray zero term");
      break;
    }
    std::vector<Monomial::Factor> factors;
    if (term != "1") {
      size_t fpos = 0;
      while (fpos < term.size()) {
        size_t fend = term.find('*', fpos);
        std::string factor = term.substr(
            fpos, fend == std::string::npos ? std::string::npos : fend - fpos);
        std::string name = factor;
        int exp = 1;
        if (size_t caret = factor.find('^'); caret != std::string::npos) {
          name = factor.substr(0, caret);
          try {
            exp = std::stoi(factor.substr(caret + 1));
          } catch (...) {
            fail("bad exponent in '" + factor + "'");
          }
          if (exp < 1)
            fail("exponent must be positive");
        }
        int v = table->find(name);
        if (v < 0)
          fail("unknown variable '" + name + "'");
        factors.push_back({static_cast<uint16_t>(v),
                           static_cast<uint16_t>(exp)});
        fpos = fend == std::string::npos ? term.size() : fend + 1;
      }
      std::sort(factors.begin(), factors.end());
      for (size_t i = 1; i < factors.size(); ++i)
        if (factors[i].first == factors[i - 1].first)
          fail("repeated variable in monomial");
    }
    terms.emplace_back(std::move(factors));
    pos = end == std::string::npos ? text.size() : end + 3;
  }
  return F2Poly::of(table, std::move(terms));
}

F2Poly substitute(const F2Poly &p, const std::vector<const F2Poly *> &images,
                  const VarTablePtr &target, TruncCtx t) {
  F2Poly out = F2Poly::zero(target);
  for (const auto &m : p.terms()) {
    F2Poly prod = F2Poly::one(target);
    for (const auto &[var, exp] : m.factors()) {
      if (var >= images.size() || images[var] == nullptr)
        throw Error("substitute: no image for variable " +
                    p.table()->name(var));
      prod = poly_mul(prod, poly_pow(*images[var], exp, t), t);
    }
    out = poly_add(out, prod);
  }
  return out;
}

} // namespace cobord
