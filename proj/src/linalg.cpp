#include "cobord/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace cobord {

void BitVec::operator^=(const BitVec &o) {
  assert(n_ == o.n_);
  for (size_t i = 0; i < w_.size(); ++i)
    w_[i] ^= o.w_[i];
}

bool BitVec::any() const {
  for (uint64_t w : w_)
    if (w)
      return true;
  return false;
}

int BitVec::lowest_set() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i])
      return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
  return -1;
}

// Invariant: stored rows are mutually reduced (each has zeros at the other
// rows' pivots), so a single elimination pass is complete.
bool GF2Solver::add(BitVec row) {
  if (cap_ > 0 && inserted_ >= cap_)
    throw Error("GF2Solver: combo capacity exhausted");
  BitVec combo(cap_);
  if (cap_ > 0)
    combo.set(inserted_);
  ++inserted_;
  for (const auto &r : rows_) {
    if (row.get(r.pivot)) {
      row ^= r.bits;
      if (cap_ > 0)
        combo ^= r.combo;
    }
  }
  int pivot = row.lowest_set();
  if (pivot < 0)
    return false;
  for (auto &r : rows_) {
    if (r.bits.get(pivot)) {
      r.bits ^= row;
      if (cap_ > 0)
        r.combo ^= combo;
    }
  }
  rows_.push_back({std::move(row), std::move(combo), pivot});
  return true;
}

bool GF2Solver::independent(BitVec row) const {
  for (const auto &r : rows_)
    if (row.get(r.pivot))
      row ^= r.bits;
  return row.any();
}

std::optional<std::vector<int>> GF2Solver::solve(BitVec v) const {
  if (cap_ == 0)
    throw Error("GF2Solver: combo tracking disabled");
  BitVec combo(cap_);
  for (const auto &r : rows_) {
    if (v.get(r.pivot)) {
      v ^= r.bits;
      combo ^= r.combo;
    }
  }
  if (v.any())
    return std::nullopt;
  std::vector<int> out;
  for (size_t i = 0; i < inserted_; ++i)
    if (combo.get(i))
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Monomial> monomials_of_degree(const VarTable &t, int n) {
  for (size_t v = 0; v < t.size(); ++v)
    if (t.weight(static_cast<int>(v)) < 1)
      throw Error("monomials_of_degree requires positive weights");
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> cur;
  // enumerate exponents variable by variable
  auto rec = [&](auto &&self, int v, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (v >= static_cast<int>(t.size()))
      return;
    int w = t.weight(v);
    self(self, v + 1, remaining); // exponent 0
    for (int e = 1; e * w <= remaining; ++e) {
      cur.push_back({static_cast<uint16_t>(v), static_cast<uint16_t>(e)});
      self(self, v + 1, remaining - e * w);
      cur.pop_back();
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), [&](const Monomial &a, const Monomial &b) {
    return Monomial::before(a, b, t);
  });
  return out;
}

int graded_slice_rank(const std::vector<F2Poly> &vectors, int n) {
  if (vectors.empty())
    return 0;
  MonomialIndex index(vectors[0].table());
  std::vector<F2Poly> slices;
  for (const auto &v : vectors) {
    F2Poly s = v.component(n);
    index.intern_all(s);
    slices.push_back(std::move(s));
  }
  GF2Solver solver(index.size());
  int rank = 0;
  for (const auto &s : slices)
    if (solver.add(index.row(s)))
      ++rank;
  return rank;
}

int graded_quotient_dim(const VarTablePtr &table,
                        const std::vector<F2Poly> &relations, int n) {
  auto mons = monomials_of_degree(*table, n);
  MonomialIndex index(table);
  for (const auto &m : mons)
    index.intern(m);
  GF2Solver solver(index.size());
  int rank = 0;
  TruncCtx t{n};
  for (const auto &r : relations) {
    int d = 0;
    if (!r.homogeneous(&d))
      throw Error("graded_quotient_dim: inhomogeneous relation");
    if (r.is_zero() || d > n)
      continue;
    for (const auto &m : monomials_of_degree(*table, n - d)) {
      F2Poly prod = poly_mul_monomial(r, m, t);
      if (solver.add(index.row(prod)))
        ++rank;
    }
  }
  return static_cast<int>(mons.size()) - rank;
}

// ---------------------------------------------------------------------------
// MonomialIndex
// ---------------------------------------------------------------------------

int MonomialIndex::index_of(const Monomial &m) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), m,
                             [&](const Node &a, const Monomial &b) {
                               return Monomial::before(a.m, b, *table_);
                             });
  if (it != sorted_.end() && it->m == m)
    return it->idx;
  return -1;
}

int MonomialIndex::intern(const Monomial &m) {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), m,
                             [&](const Node &a, const Monomial &b) {
                               return Monomial::before(a.m, b, *table_);
                             });
  if (it != sorted_.end() && it->m == m)
    return it->idx;
  int idx = static_cast<int>(list_.size());
  list_.push_back(m);
  sorted_.insert(it, {m, idx});
  return idx;
}

int MonomialIndex::intern_all(const F2Poly &p) {
  int mx = -1;
  for (const auto &m : p.terms())
    mx = std::max(mx, intern(m));
  return mx;
}

BitVec MonomialIndex::row(const F2Poly &p) const {
  BitVec v(size());
  for (const auto &m : p.terms()) {
    int idx = index_of(m);
    if (idx < 0)
      throw Error("MonomialIndex: monomial outside the index");
    v.set(idx);
  }
  return v;
}

F2Poly MonomialIndex::poly_of(const BitVec &v) const {
  std::vector<Monomial> terms;
  for (size_t i = 0; i < v.size() && i < list_.size(); ++i)
    if (v.get(i))
      terms.push_back(list_[i]);
  return F2Poly::of(table_, std::move(terms));
}

} // namespace cobord
