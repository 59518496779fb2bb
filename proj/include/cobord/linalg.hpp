#ifndef COBORD_LINALG_HPP
#define COBORD_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cobord/f2poly.hpp"

namespace cobord {

// Dense bit vector over F2.
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(size_t bits) : n_(bits), w_((bits + 63) / 64, 0) {}

  size_t size() const { return n_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void operator^=(const BitVec &o);
  bool any() const;
  int lowest_set() const; // -1 if zero

private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

// Incremental row echelon over F2. With a nonzero combo capacity each reduced
// row remembers which inserted rows produced it, so membership queries can
// return the combination.
class GF2Solver {
public:
  explicit GF2Solver(size_t cols, size_t combo_capacity = 0)
      : cols_(cols), cap_(combo_capacity) {}

  // Returns true when the row was independent of the rows inserted so far.
  bool add(BitVec row);

  // Non-mutating independence probe.
  bool independent(BitVec row) const;

  size_t rank() const { return rows_.size(); }
  size_t inserted() const { return inserted_; }

  // Expresses v in the span of the inserted rows: list of inserted-row
  // indices, or nullopt when v is outside the span. Requires combo tracking.
  std::optional<std::vector<int>> solve(BitVec v) const;

private:
  size_t cols_;
  size_t cap_;
  size_t inserted_ = 0;
  struct Row {
    BitVec bits;
    BitVec combo; // over inserted-row indices
    int pivot;
  };
  std::vector<Row> rows_;
};

// All monomials of exact weighted degree n over a table whose weights are all
// positive, in the canonical order.
std::vector<Monomial> monomials_of_degree(const VarTable &t, int n);

// F2-dimension of the span of the degree-n components of the given vectors.
int graded_slice_rank(const std::vector<F2Poly> &vectors, int n);

// Dimension in degree n of F2[generators]/(relations), all relations
// homogeneous: monomial count minus the rank of {r*m : deg(r*m) = n}.
int graded_quotient_dim(const VarTablePtr &table,
                        const std::vector<F2Poly> &relations, int n);

// Shared column indexing for turning polynomials into bit rows.
class MonomialIndex {
public:
  explicit MonomialIndex(VarTablePtr table) : table_(std::move(table)) {}

  int index_of(const Monomial &m) const; // -1 if absent
  int intern(const Monomial &m);
  size_t size() const { return list_.size(); }

  BitVec row(const F2Poly &p) const;        // throws if a term is absent
  int intern_all(const F2Poly &p);          // returns max index touched
  F2Poly poly_of(const BitVec &v) const;

private:
  VarTablePtr table_;
  std::vector<Monomial> list_;
  struct Node {
    Monomial m;
    int idx;
  };
  std::vector<Node> sorted_; // by canonical order, for lookup
};

} // namespace cobord

#endif
