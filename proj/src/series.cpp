#include "cobord/series.hpp"

#include <algorithm>

namespace cobord {

// ---------------------------------------------------------------------------
// UniSeries
// ---------------------------------------------------------------------------

UniSeries::UniSeries(VarTablePtr table, int M)
    : table_(std::move(table)), M_(M), c_(M + 1, F2Poly::zero(table_)) {}

UniSeries UniSeries::x(VarTablePtr table, int M) {
  UniSeries s(table, M);
  s.set_coeff(1, F2Poly::one(s.table_));
  return s;
}

const F2Poly &UniSeries::coeff(int k) const {
  if (k < 0 || k > M_)
    throw WindowInsufficient("UniSeries: coefficient beyond order " +
                             std::to_string(M_));
  return c_[k];
}

void UniSeries::set_coeff(int k, F2Poly p) {
  if (k < 0 || k > M_)
    throw WindowInsufficient("UniSeries: coefficient beyond order");
  c_[k] = std::move(p);
}

bool UniSeries::operator==(const UniSeries &o) const {
  return M_ == o.M_ && c_ == o.c_;
}

UniSeries series_add(const UniSeries &f, const UniSeries &g) {
  int M = std::min(f.order(), g.order());
  UniSeries out(f.table(), M);
  for (int k = 0; k <= M; ++k)
    out.set_coeff(k, poly_add(f.coeff(k), g.coeff(k)));
  return out;
}

UniSeries series_mul(const UniSeries &f, const UniSeries &g, TruncCtx t) {
  int M = std::min(f.order(), g.order());
  UniSeries out(f.table(), M);
  for (int i = 0; i <= M; ++i) {
    if (f.coeff(i).is_zero())
      continue;
    for (int j = 0; i + j <= M; ++j) {
      if (g.coeff(j).is_zero())
        continue;
      out.set_coeff(i + j, poly_add(out.coeff(i + j),
                                    poly_mul(f.coeff(i), g.coeff(j), t)));
    }
  }
  return out;
}

UniSeries series_compose(const UniSeries &f, const UniSeries &g, TruncCtx t) {
  if (!g.coeff(0).is_zero())
    throw Error("series_compose: inner series has nonzero constant term");
  int M = std::min(f.order(), g.order());
  // Horner from the top coefficient down
  UniSeries acc(f.table(), M);
  for (int k = f.order(); k >= 0; --k) {
    acc = series_mul(acc, g, t);
    if (!f.coeff(k).is_zero()) {
      UniSeries c(f.table(), M);
      c.set_coeff(0, f.coeff(k));
      acc = series_add(acc, c);
    }
  }
  return acc;
}

UniSeries series_reversion(const UniSeries &f, TruncCtx t) {
  if (!f.coeff(0).is_zero() || !f.coeff(1).is_one())
    throw Error("series_reversion: series must start with x");
  int M = f.order();
  UniSeries g = UniSeries::x(f.table(), M);
  // Solve f(g) = x degreewise: the defect at degree k is exactly the missing
  // coefficient of g (f has leading coefficient 1, characteristic 2).
  for (int k = 2; k <= M; ++k) {
    UniSeries fg = series_compose(f, g, t);
    g.set_coeff(k, fg.coeff(k));
  }
  return g;
}

// ---------------------------------------------------------------------------
// ESeries
// ---------------------------------------------------------------------------

ESeries::ESeries(VarTablePtr table, int lo, int hi)
    : table_(std::move(table)), lo_(lo), hi_(hi),
      c_(hi - lo + 1, F2Poly::zero(table_)) {
  if (lo > hi)
    throw Error("ESeries: empty window");
}

ESeries ESeries::zero(VarTablePtr table, int lo, int hi) {
  return ESeries(std::move(table), lo, hi);
}

ESeries ESeries::constant(const F2Poly &p, int hi) {
  ESeries s(p.table(), 0, hi);
  s.set_coeff(0, p);
  return s;
}

const F2Poly &ESeries::coeff(int j) const {
  if (j < lo_ || j > hi_)
    throw WindowInsufficient("ESeries: exponent " + std::to_string(j) +
                             " outside certified window [" +
                             std::to_string(lo_) + "," + std::to_string(hi_) +
                             "]");
  return c_[j - lo_];
}

F2Poly ESeries::coeff_or_zero(int j) const {
  if (j < lo_)
    return F2Poly::zero(table_);
  return coeff(j);
}

void ESeries::set_coeff(int j, F2Poly p) {
  if (j < lo_ || j > hi_)
    throw WindowInsufficient("ESeries: set outside window");
  c_[j - lo_] = std::move(p);
}

bool ESeries::is_zero() const {
  for (const auto &p : c_)
    if (!p.is_zero())
      return false;
  return true;
}

ESeries ESeries::restricted(int new_lo, int new_hi) const {
  if (new_lo < lo_)
    new_lo = lo_;
  if (new_hi > hi_)
    throw WindowInsufficient("ESeries: cannot extend certification");
  ESeries out(table_, new_lo, new_hi);
  for (int j = new_lo; j <= new_hi; ++j)
    out.set_coeff(j, coeff(j));
  return out;
}

bool ESeries::operator==(const ESeries &o) const {
  if (lo_ != o.lo_ || hi_ != o.hi_)
    return false;
  return c_ == o.c_;
}

ESeries eseries_add(const ESeries &a, const ESeries &b) {
  int lo = std::min(a.lo(), b.lo());
  int hi = std::min(a.hi(), b.hi());
  if (lo > hi)
    throw WindowInsufficient("eseries_add: windows do not overlap");
  ESeries out(a.table(), lo, hi);
  for (int j = lo; j <= hi; ++j)
    out.set_coeff(j, poly_add(a.coeff_or_zero(j), b.coeff_or_zero(j)));
  return out;
}

ESeries eseries_mul(const ESeries &a, const ESeries &b, TruncCtx t) {
  int lo = a.lo() + b.lo();
  int hi = std::min(a.hi() + b.lo(), b.hi() + a.lo());
  ESeries out(a.table(), lo, hi);
  for (int ja = a.lo(); ja <= a.hi(); ++ja) {
    if (a.coeff(ja).is_zero())
      continue;
    for (int jb = b.lo(); jb <= b.hi(); ++jb) {
      int j = ja + jb;
      if (j > hi)
        break;
      if (b.coeff(jb).is_zero())
        continue;
      out.set_coeff(j, poly_add(out.coeff(j),
                                poly_mul(a.coeff(ja), b.coeff(jb), t)));
    }
  }
  return out;
}

ESeries eseries_scale(const ESeries &a, const F2Poly &s, TruncCtx t) {
  ESeries out(a.table(), a.lo(), a.hi());
  for (int j = a.lo(); j <= a.hi(); ++j)
    out.set_coeff(j, poly_mul(a.coeff(j), s, t));
  return out;
}

ESeries eseries_shift(const ESeries &a, int k) {
  ESeries out(a.table(), a.lo() + k, a.hi() + k);
  for (int j = a.lo(); j <= a.hi(); ++j)
    out.set_coeff(j + k, a.coeff(j));
  return out;
}

bool eseries_homogeneous(const ESeries &a, int n) {
  for (int j = a.lo(); j <= a.hi(); ++j) {
    int d = 0;
    if (!a.coeff(j).homogeneous(&d))
      return false;
    if (!a.coeff(j).is_zero() && d != n + j)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// invert_F
// ---------------------------------------------------------------------------

bool RecipTable::in_window(int i, int j) const {
  return c.count({i, j}) > 0;
}

const F2Poly &RecipTable::at(int i, int j) const {
  auto it = c.find({i, j});
  if (it == c.end())
    throw WindowInsufficient(
        "reciprocal table: (" + std::to_string(i) + "," + std::to_string(j) +
        ") outside the certified window (yMax=" + std::to_string(yMax) +
        ", degree<=" + std::to_string(N) + ")");
  return it->second;
}

RecipTable invert_F(const BivarSeries &F, int yMax, TruncCtx t, bool verify) {
  const VarTablePtr &B = F.table();
  // Preconditions: F = e + y + interior terms.
  if (!F.coeff({0, 0}).is_zero() || !F.coeff({1, 0}).is_one() ||
      !F.coeff({0, 1}).is_one())
    throw Error("invert_F: malformed series, need F = e + y + ...");
  for (const auto &[k, p] : F.coeffs()) {
    if ((k[0] == 0 && k[1] >= 2) || (k[1] == 0 && k[0] >= 2))
      throw Error("invert_F: malformed series, unit rows must vanish");
  }
  if (yMax < 0)
    throw Error("invert_F: yMax must be >= 0");

  const int N = t.N;

  // G = e^{-1}(F - e), divisible by y. Everything below is homogeneous
  // (the y^d e^j entry of G^m has weighted degree d + j), so convolving on
  // the fixed window [-yMax-1, N] is exact for every entry of degree <= N;
  // entries of higher degree are dropped by the coefficient truncation and
  // never exported.
  const int wlo = -yMax - 1, whi = N;
  auto g_row = [&](int d) {
    ESeries r(B, wlo, whi);
    for (const auto &[k, p] : F.coeffs()) {
      if (k[1] != d || (k[0] == 1 && d == 0))
        continue;
      int j = k[0] - 1;
      if (j >= wlo && j <= whi)
        r.set_coeff(j, p);
    }
    return r;
  };

  std::vector<ESeries> gup;
  gup.reserve(yMax + 1);
  for (int d = 0; d <= yMax; ++d)
    gup.push_back(g_row(d));

  auto conv = [&](const ESeries &a, const ESeries &b) {
    ESeries out(B, wlo, whi);
    for (int ja = a.lo(); ja <= a.hi(); ++ja) {
      if (a.coeff(ja).is_zero())
        continue;
      for (int jb = b.lo(); jb <= b.hi(); ++jb) {
        int j = ja + jb;
        if (j < wlo || j > whi || b.coeff(jb).is_zero())
          continue;
        out.set_coeff(j, poly_add(out.coeff(j),
                                  poly_mul(a.coeff(ja), b.coeff(jb), t)));
      }
    }
    return out;
  };

  // S = sum_{m<=yMax} G^m; only powers m <= i reach y-degree i.
  auto blank = [&]() {
    return std::vector<ESeries>(yMax + 1, ESeries::zero(B, wlo, whi));
  };
  std::vector<ESeries> power = blank();
  power[0] = ESeries::zero(B, wlo, whi);
  power[0].set_coeff(0, F2Poly::one(B));
  std::vector<ESeries> total = power;
  for (int m = 1; m <= yMax; ++m) {
    std::vector<ESeries> next = blank();
    for (int d1 = m - 1; d1 <= yMax; ++d1) {
      if (power[d1].is_zero())
        continue;
      for (int d2 = 1; d1 + d2 <= yMax; ++d2) {
        if (gup[d2].is_zero())
          continue;
        next[d1 + d2] = eseries_add(next[d1 + d2], conv(power[d1], gup[d2]));
      }
    }
    power = std::move(next);
    for (int d = 0; d <= yMax; ++d)
      total[d] = eseries_add(total[d], power[d]);
  }

  RecipTable out;
  out.yMax = yMax;
  out.N = N;
  for (int i = 0; i <= yMax; ++i) {
    ESeries row = eseries_shift(total[i], -1);
    for (int j = -i - 1; j <= N - i - 1; ++j)
      out.c[{i, j}] = row.coeff_or_zero(j);
  }

  if (verify) {
    if (auto bad = recip_identity_failure(F, out, t))
      throw BuildError("invert_F: identity F*(1/F)=1 fails at " + *bad);
  }
  return out;
}

std::optional<std::string> recip_identity_failure(const BivarSeries &F,
                                                  const RecipTable &rt,
                                                  TruncCtx t) {
  const VarTablePtr &B = F.table();
  const int N = rt.N, yMax = rt.yMax;
  // For j <= N-i-1 every reciprocal entry a contribution needs is in-window.
  std::vector<std::vector<std::pair<int, F2Poly>>> frow(yMax + 1);
  frow[0].push_back({1, F2Poly::one(B)});
  for (const auto &[k, p] : F.coeffs())
    if (k[1] >= 1 && k[1] <= yMax)
      frow[k[1]].push_back({k[0], p});
  for (int i = 0; i <= yMax; ++i) {
    for (int j = -i - 1; j <= N - i - 1; ++j) {
      F2Poly acc = F2Poly::zero(B);
      for (int d = 0; d <= i; ++d) {
        for (const auto &[ja, p] : frow[d]) {
          int jc = j - ja;
          if (jc < -(i - d) - 1)
            continue; // below exact support
          acc = poly_add(acc, poly_mul(p, rt.at(i - d, jc), t));
        }
      }
      bool expect_one = (i == 0 && j == 0);
      if (expect_one ? !acc.is_one() : !acc.is_zero())
        return "y^" + std::to_string(i) + " e^" + std::to_string(j);
    }
  }
  return std::nullopt;
}

} // namespace cobord
