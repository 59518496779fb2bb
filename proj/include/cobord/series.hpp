#ifndef COBORD_SERIES_HPP
#define COBORD_SERIES_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "cobord/f2poly.hpp"

namespace cobord {

// ---------------------------------------------------------------------------
// One-variable power series with F2Poly coefficients, carried to x-degree M.
// ---------------------------------------------------------------------------

class UniSeries {
public:
  UniSeries(VarTablePtr table, int M);

  static UniSeries x(VarTablePtr table, int M); // the identity series

  int order() const { return M_; }
  const VarTablePtr &table() const { return table_; }
  const F2Poly &coeff(int k) const;
  void set_coeff(int k, F2Poly p);

  bool operator==(const UniSeries &o) const;

private:
  VarTablePtr table_;
  int M_;
  std::vector<F2Poly> c_;
};

UniSeries series_add(const UniSeries &f, const UniSeries &g);
UniSeries series_mul(const UniSeries &f, const UniSeries &g, TruncCtx t);

// f(g(x)) through x-degree min(f.M, g.M); g must have zero constant term.
UniSeries series_compose(const UniSeries &f, const UniSeries &g, TruncCtx t);

// Compositional inverse of f = x + (higher); f(g(x)) = x through degree M.
UniSeries series_reversion(const UniSeries &f, TruncCtx t);

// ---------------------------------------------------------------------------
// Windowed Laurent series in the Euler class e.
// ---------------------------------------------------------------------------

// Coefficients for exponents lo..hi. lo is an exact support bound (the series
// is known to vanish below it); hi is the certified extent: coefficients
// beyond hi are unknown, not zero.
class ESeries {
public:
  ESeries(VarTablePtr table, int lo, int hi);

  static ESeries zero(VarTablePtr table, int lo, int hi);
  static ESeries constant(const F2Poly &p, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const VarTablePtr &table() const { return table_; }

  const F2Poly &coeff(int j) const; // throws WindowInsufficient outside window
  F2Poly coeff_or_zero(int j) const;
  void set_coeff(int j, F2Poly p);

  bool is_zero() const;
  // Drops certification above new_hi and leading zero rows below.
  ESeries restricted(int new_lo, int new_hi) const;

  bool operator==(const ESeries &o) const; // same window and coefficients

private:
  VarTablePtr table_;
  int lo_, hi_;
  std::vector<F2Poly> c_;
};

ESeries eseries_add(const ESeries &a, const ESeries &b);
ESeries eseries_mul(const ESeries &a, const ESeries &b, TruncCtx t);
ESeries eseries_scale(const ESeries &a, const F2Poly &s, TruncCtx t);
ESeries eseries_shift(const ESeries &a, int k); // multiply by e^k

// Coefficient at e^j is homogeneous of weighted degree n + j for all stored j.
bool eseries_homogeneous(const ESeries &a, int n);

// ---------------------------------------------------------------------------
// Formal series in K commuting variables with F2Poly coefficients, truncated
// at total formal degree M.
// ---------------------------------------------------------------------------

template <int K> class FormalSeries {
public:
  using Key = std::array<int, K>;

  FormalSeries(VarTablePtr table, int M) : table_(table), M_(M) {}

  int order() const { return M_; }
  const VarTablePtr &table() const { return table_; }
  const std::map<Key, F2Poly> &coeffs() const { return c_; }

  F2Poly coeff(const Key &k) const {
    auto it = c_.find(k);
    return it == c_.end() ? F2Poly::zero(table_) : it->second;
  }

  void set_coeff(const Key &k, F2Poly p) {
    int total = 0;
    for (int e : k)
      total += e;
    if (total > M_)
      return;
    if (p.is_zero())
      c_.erase(k);
    else
      c_[k] = std::move(p);
  }

  void add_coeff(const Key &k, const F2Poly &p) {
    int total = 0;
    for (int e : k)
      total += e;
    if (total > M_ || p.is_zero())
      return;
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_[k] = p;
    } else {
      it->second = poly_add(it->second, p);
      if (it->second.is_zero())
        c_.erase(it);
    }
  }

  bool operator==(const FormalSeries &o) const { return c_ == o.c_; }

private:
  VarTablePtr table_;
  int M_;
  std::map<Key, F2Poly> c_;
};

using BivarSeries = FormalSeries<2>;
using TrivarSeries = FormalSeries<3>;

template <int K>
FormalSeries<K> formal_add(const FormalSeries<K> &a, const FormalSeries<K> &b) {
  FormalSeries<K> out = a;
  for (const auto &[k, p] : b.coeffs())
    out.add_coeff(k, p);
  return out;
}

template <int K>
FormalSeries<K> formal_mul(const FormalSeries<K> &a, const FormalSeries<K> &b,
                           TruncCtx t) {
  FormalSeries<K> out(a.table(), std::min(a.order(), b.order()));
  for (const auto &[ka, pa] : a.coeffs())
    for (const auto &[kb, pb] : b.coeffs()) {
      typename FormalSeries<K>::Key k;
      int total = 0;
      for (int i = 0; i < K; ++i) {
        k[i] = ka[i] + kb[i];
        total += k[i];
      }
      if (total > out.order())
        continue;
      out.add_coeff(k, poly_mul(pa, pb, t));
    }
  return out;
}

// Evaluates the two-variable series F at a pair of K-variable arguments with
// zero constant term.
template <int K>
FormalSeries<K> formal_eval2(const BivarSeries &F, const FormalSeries<K> &A,
                             const FormalSeries<K> &B, int M, TruncCtx t) {
  if (!F.coeff({0, 0}).is_zero() || !A.coeff(typename FormalSeries<K>::Key{})
                                         .is_zero() ||
      !B.coeff(typename FormalSeries<K>::Key{}).is_zero())
    throw Error("formal_eval2: nonzero constant term");
  int maxi = 0, maxj = 0;
  for (const auto &[k, p] : F.coeffs()) {
    maxi = std::max(maxi, k[0]);
    maxj = std::max(maxj, k[1]);
  }
  std::vector<FormalSeries<K>> apow, bpow;
  FormalSeries<K> one(A.table(), M);
  one.set_coeff(typename FormalSeries<K>::Key{}, F2Poly::one(A.table()));
  apow.push_back(one);
  bpow.push_back(one);
  for (int i = 1; i <= maxi; ++i)
    apow.push_back(formal_mul(apow.back(), A, t));
  for (int j = 1; j <= maxj; ++j)
    bpow.push_back(formal_mul(bpow.back(), B, t));
  FormalSeries<K> out(A.table(), M);
  for (const auto &[k, p] : F.coeffs()) {
    FormalSeries<K> term = formal_mul(apow[k[0]], bpow[k[1]], t);
    for (const auto &[mk, mp] : term.coeffs())
      out.add_coeff(mk, poly_mul(mp, p, t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reciprocal of a formal group law expanded at (e, y).
// ---------------------------------------------------------------------------

// Coefficients c[i][j] of y^i e^j in 1/F(e,y), stored for 0 <= i <= yMax and
// -i-1 <= j <= N-i-1 (each entry is homogeneous of weighted degree i+j+1).
struct RecipTable {
  int yMax = 0;
  int N = 0;
  std::map<std::pair<int, int>, F2Poly> c;

  bool in_window(int i, int j) const;
  const F2Poly &at(int i, int j) const; // throws WindowInsufficient
};

// Inverts F = e + y + sum_{i,j>=1} a_{i,j} e^i y^j via the y-adically
// convergent expansion 1/F = e^{-1} sum_m (e^{-1}(F-e))^m. When verify is set
// the defining identity F*(1/F) = 1 is checked on the certified window.
// F is indexed as coeff({i, j}) = coefficient of e^i y^j.
RecipTable invert_F(const BivarSeries &F, int yMax, TruncCtx t,
                    bool verify = true);

// Coefficientwise check of F*(1/F) = 1 on the certified window; returns the
// first failing position, or nullopt when the identity holds.
std::optional<std::string> recip_identity_failure(const BivarSeries &F,
                                                  const RecipTable &rt,
                                                  TruncCtx t);

} // namespace cobord

#endif
