#include "cobord/sw.hpp"

#include <algorithm>

namespace cobord {

bool SwProfile::all_zero() const {
  for (const auto &[k, v] : values)
    if (v)
      return false;
  return true;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, int remaining, int maxPart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

// Multiplication in F2[x_1..x_k] with per-variable exponent caps (quotient by
// the monomial ideal (x_t^{cap_t+1})).
F2Poly capped_mul(const F2Poly &p, const F2Poly &q,
                  const std::vector<int> &caps, TruncCtx t) {
  F2Poly raw = poly_mul(p, q, t);
  std::vector<Monomial> keep;
  for (const auto &m : raw.terms()) {
    bool ok = true;
    for (const auto &[v, e] : m.factors())
      if (e > caps[v]) {
        ok = false;
        break;
      }
    if (ok)
      keep.push_back(m);
  }
  return F2Poly::of(p.table(), std::move(keep));
}

} // namespace

SwProfile sw_numbers_projective_product(const std::vector<int> &dims) {
  if (dims.empty())
    throw Error("sw_numbers_projective_product: empty dimension list");
  for (int d : dims)
    if (d < 1)
      throw Error("sw_numbers_projective_product: dimensions must be >= 1");
  int n = 0;
  for (int d : dims)
    n += d;
  auto table = std::make_shared<VarTable>();
  for (size_t t = 0; t < dims.size(); ++t)
    table->add("x" + std::to_string(t + 1), 1);
  VarTablePtr X = table;
  TruncCtx trunc{n};
  std::vector<int> caps(dims.begin(), dims.end());

  // total class: product of (1+x_t)^{dims_t+1} mod x_t^{dims_t+1}
  F2Poly w = F2Poly::one(X);
  for (size_t t = 0; t < dims.size(); ++t) {
    F2Poly onePlus = poly_add(F2Poly::one(X),
                              F2Poly::var(X, static_cast<int>(t)));
    for (int rep = 0; rep < dims[t] + 1; ++rep)
      w = capped_mul(w, onePlus, caps, trunc);
  }

  // fundamental-class monomial
  std::vector<Monomial::Factor> top;
  for (size_t t = 0; t < dims.size(); ++t)
    top.push_back({static_cast<uint16_t>(t), static_cast<uint16_t>(dims[t])});
  Monomial fundamental{std::move(top)};

  SwProfile out;
  out.n = n;
  for (const auto &lambda : partitions_of(n)) {
    F2Poly prod = F2Poly::one(X);
    for (int part : lambda)
      prod = capped_mul(prod, w.component(part), caps, trunc);
    out.values[lambda] = prod.contains(fundamental) ? 1 : 0;
  }
  return out;
}

SwProfile sw_numbers_of_class(const F2Poly &elt, int n,
                              const OmegaBasis &omega) {
  int d = 0;
  if (!elt.homogeneous(&d) || (!elt.is_zero() && d != n))
    throw Error("sw_numbers_of_class: element not homogeneous of degree " +
                std::to_string(n));
  if (!omega.in_omega(elt))
    throw NotInSubring("sw_numbers_of_class: not in the coefficient subring");

  // inverted total classes in F2[w1..wn]
  auto wt = std::make_shared<VarTable>();
  for (int i = 1; i <= std::max(n, 1); ++i)
    wt->add("w" + std::to_string(i), i);
  VarTablePtr W = wt;
  TruncCtx trunc{n};
  std::vector<F2Poly> wbar(n + 1, F2Poly::zero(W));
  wbar[0] = F2Poly::one(W);
  for (int i = 1; i <= n; ++i) {
    F2Poly acc = F2Poly::zero(W);
    for (int s = 1; s <= i; ++s)
      acc = poly_add(acc, poly_mul_monomial(wbar[i - s],
                                            Monomial::var(s - 1), trunc));
    wbar[i] = std::move(acc);
  }

  SwProfile out;
  out.n = n;
  const VarTable &B = *elt.table();
  for (const auto &lambda : partitions_of(n)) {
    F2Poly P = F2Poly::one(W);
    for (int part : lambda)
      P = poly_mul(P, wbar[part], trunc);

    int bit = 0;
    for (const auto &bmon : elt.terms()) {
      // factor multiset mu of the b-monomial
      std::vector<int> mu;
      for (const auto &[v, e] : bmon.factors())
        for (int rep = 0; rep < e; ++rep)
          mu.push_back(B.weight(v));
      int k = static_cast<int>(mu.size());

      // elementary symmetric polynomials over x_1..x_k
      auto xt = std::make_shared<VarTable>();
      for (int t = 1; t <= std::max(k, 1); ++t)
        xt->add("x" + std::to_string(t), 1);
      VarTablePtr X = xt;
      std::vector<F2Poly> elem(n + 1, F2Poly::zero(X));
      elem[0] = F2Poly::one(X);
      for (int t = 0; t < k; ++t) {
        // multiply (1 + x_{t+1} z) into the generating polynomial
        for (int s = std::min(n, t + 1); s >= 1; --s)
          elem[s] = poly_add(elem[s], poly_mul_monomial(elem[s - 1],
                                                        Monomial::var(t),
                                                        trunc));
      }
      std::vector<const F2Poly *> images(W->size(), nullptr);
      for (size_t wv = 0; wv < W->size(); ++wv)
        if (wv + 1 <= static_cast<size_t>(n))
          images[wv] = &elem[wv + 1];
      F2Poly img = substitute(P, images, X, trunc);

      std::vector<Monomial::Factor> mf;
      for (int t = 0; t < k; ++t)
        mf.push_back({static_cast<uint16_t>(t), static_cast<uint16_t>(mu[t])});
      // factors must be sorted by variable index; they are by construction
      bit ^= img.contains(Monomial{std::move(mf)}) ? 1 : 0;
    }
    out.values[lambda] = bit;
  }
  return out;
}

} // namespace cobord
