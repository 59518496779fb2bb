#ifndef COBORD_F2POLY_HPP
#define COBORD_F2POLY_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cobord {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Incompatible variable tables in a binary operation.
struct TableMismatch : Error {
  explicit TableMismatch(const std::string &msg) : Error(msg) {}
};

// An index or degree lies beyond the truncation the tables were built for.
struct TruncationExceeded : Error {
  explicit TruncationExceeded(const std::string &msg) : Error(msg) {}
};

// A Laurent-window query outside the certified range.
struct WindowInsufficient : Error {
  explicit WindowInsufficient(const std::string &msg) : Error(msg) {}
};

// Internal consistency failure (e.g. a dimension count that must hold).
struct BuildError : Error {
  explicit BuildError(const std::string &msg) : Error(msg) {}
};

struct ParseError : Error {
  size_t pos;
  ParseError(const std::string &msg, size_t at) : Error(msg), pos(at) {}
};

struct CacheError : Error {
  explicit CacheError(const std::string &msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Variable tables and truncation
// ---------------------------------------------------------------------------

// Ordered list of named, weighted variables. Ring variables have weight >= 1;
// a series variable (the Euler class e) may have negative weight. The index
// order is fixed for the lifetime of a context and determines the canonical
// monomial order.
class VarTable {
public:
  struct Entry {
    std::string name;
    int weight;
  };

  VarTable() = default;

  int add(std::string name, int weight);
  size_t size() const { return entries_.size(); }
  const std::string &name(int v) const { return entries_[v].name; }
  int weight(int v) const { return entries_[v].weight; }
  // -1 if unknown
  int find(const std::string &name) const;

private:
  std::vector<Entry> entries_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// Maximal total weighted degree retained by ring operations.
struct TruncCtx {
  int N;
};

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

// Sparse exponent map, sorted by variable index. Over F2 a present monomial
// carries coefficient 1.
class Monomial {
public:
  using Factor = std::pair<uint16_t, uint16_t>; // (variable, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors) : f_(std::move(factors)) {}

  static Monomial var(int v, int exp = 1);

  bool is_one() const { return f_.empty(); }
  const std::vector<Factor> &factors() const { return f_; }
  int exponent(int v) const;

  int degree(const VarTable &t) const;
  Monomial times(const Monomial &other) const;

  bool operator==(const Monomial &o) const { return f_ == o.f_; }

  // Graded-lex: lower total degree first; at equal degree the monomial with
  // the larger exponent on the first differing variable (ascending index)
  // comes first.
  static bool before(const Monomial &a, const Monomial &b, const VarTable &t);

private:
  std::vector<Factor> f_;
};

// ---------------------------------------------------------------------------
// Polynomials over F2
// ---------------------------------------------------------------------------

// Set of monomials kept in the canonical order; addition is symmetric
// difference. The zero polynomial is the empty set.
class F2Poly {
public:
  F2Poly() = default;
  explicit F2Poly(VarTablePtr table) : table_(std::move(table)) {}

  static F2Poly zero(VarTablePtr table) { return F2Poly(std::move(table)); }
  static F2Poly one(VarTablePtr table);
  static F2Poly var(VarTablePtr table, int v, int exp = 1);
  static F2Poly of(VarTablePtr table, std::vector<Monomial> monomials);

  const VarTablePtr &table() const { return table_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial> &terms() const { return terms_; }

  bool contains(const Monomial &m) const;
  void toggle(const Monomial &m); // XOR a single monomial in or out

  // Total weighted degree of the highest term, 0 for the zero polynomial.
  int degree() const;
  bool homogeneous(int *deg_out = nullptr) const;
  F2Poly component(int degree) const; // homogeneous slice

  bool operator==(const F2Poly &o) const { return terms_ == o.terms_; }
  bool operator!=(const F2Poly &o) const { return !(*this == o); }

private:
  VarTablePtr table_;
  std::vector<Monomial> terms_; // sorted, canonical order

  friend F2Poly poly_add(const F2Poly &p, const F2Poly &q);
  friend F2Poly poly_mul(const F2Poly &p, const F2Poly &q, TruncCtx t);
  friend F2Poly poly_mul_monomial(const F2Poly &p, const Monomial &m,
                                  TruncCtx t);
};

F2Poly poly_add(const F2Poly &p, const F2Poly &q);
F2Poly poly_mul(const F2Poly &p, const F2Poly &q, TruncCtx t);
F2Poly poly_mul_monomial(const F2Poly &p, const Monomial &m, TruncCtx t);
F2Poly poly_pow(const F2Poly &p, int k, TruncCtx t);

// Canonical textual rendering: monomials in the fixed order, variables as
// name^exp joined by '*', terms joined by ' + ', zero as "0".
std::string render(const Monomial &m, const VarTable &t);
std::string render(const F2Poly &p);

// Parse the canonical rendering back over a given table.
F2Poly parse_poly(const std::string &text, const VarTablePtr &table);

// Substitute variables by polynomial images over a target table. images[v]
// must be set for every variable that occurs.
F2Poly substitute(const F2Poly &p, const std::vector<const F2Poly *> &images,
                  const VarTablePtr &target, TruncCtx t);

} // namespace cobord

#endif
