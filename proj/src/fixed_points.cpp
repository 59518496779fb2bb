#include "cobord/fixed_points.hpp"

#include <algorithm>

namespace cobord {

ESeries phi_map(const Model &m, const F2Poly &phi_elt, int lo, int hi) {
  TruncCtx t{m.Nctx()};
  ESeries out = ESeries::zero(m.B(), lo, hi);
  size_t bcount = m.B()->size();
  for (const auto &mon : phi_elt.terms()) {
    ESeries prod = ESeries::constant(F2Poly::one(m.B()), m.Nctx());
    F2Poly scalar = F2Poly::one(m.B());
    for (const auto &[v, e] : mon.factors()) {
      if (v < bcount) {
        scalar = poly_mul_monomial(scalar, Monomial::var(v, e), t);
        continue;
      }
      int i = v - static_cast<int>(bcount);
      ESeries row = m.phi_row(i);
      for (int rep = 0; rep < e; ++rep)
        prod = eseries_mul(prod, row, t);
    }
    prod = eseries_scale(prod, scalar, t);
    if (prod.hi() < hi)
      throw WindowInsufficient("phi_map: certified hi " +
                               std::to_string(prod.hi()) +
                               " below requested " + std::to_string(hi));
    out = eseries_add(out, prod.restricted(lo, hi));
  }
  return out;
}

F2Poly RElem::whole(const Model &m) const {
  TruncCtx t{2 * m.Nctx()};
  F2Poly out = m.eq_to_r(f0);
  out = poly_add(out,
                 poly_mul_monomial(f1, Monomial::var(m.r_evar()), t));
  return out;
}

namespace {

struct Reducible {
  size_t term;     // index into terms()
  int dvar;        // eq/r variable index of the chosen d(i,j), j >= 1
  int i, j;
  bool fake = false; // the deliberately wrong e*d(1,0) -> 0 rule
};

std::optional<Reducible> find_reducible(const Model &m, const F2Poly &cur,
                                        const RewritePolicy &policy) {
  const int evar = m.r_evar();
  for (size_t ti = 0; ti < cur.terms().size(); ++ti) {
    const Monomial &mon = cur.terms()[ti];
    if (mon.exponent(evar) == 0)
      continue;
    std::vector<std::array<int, 3>> eligible; // (var, i, j)
    bool has_d10 = false;
    for (const auto &[v, e] : mon.factors()) {
      if (v == evar)
        continue;
      auto [i, j] = m.dvar_index(v);
      if (j >= 1)
        eligible.push_back({v, i, j});
      if (j == 0 && i == 1)
        has_d10 = true;
    }
    if (policy.fake_kill_ed10 && has_d10)
      return Reducible{ti, -1, 1, 0, true};
    if (eligible.empty())
      continue;
    size_t pick = 0;
    if (policy.rng)
      pick = (*policy.rng)() % eligible.size();
    auto [v, i, j] = eligible[pick];
    return Reducible{ti, v, i, j, false};
  }
  return std::nullopt;
}

} // namespace

RElem r_normal_form(const Model &m, const F2Poly &expr,
                    const RewritePolicy &policy) {
  if (expr.table().get() != m.rTable().get())
    throw TableMismatch("r_normal_form: expression not over the r table");
  TruncCtx t{2 * m.Nctx()};
  const int evar = m.r_evar();
  F2Poly cur = expr;
  while (auto red = find_reducible(m, cur, policy)) {
    Monomial mon = cur.terms()[red->term];
    F2Poly delta = F2Poly::zero(m.rTable());
    delta.toggle(mon);
    if (!red->fake) {
      // quotient = mon / (e * d(i,j))
      std::vector<Monomial::Factor> q;
      for (auto [v, e] : mon.factors()) {
        int drop = 0;
        if (v == evar || v == red->dvar)
          drop = 1;
        if (e - drop > 0)
          q.push_back({v, static_cast<uint16_t>(e - drop)});
      }
      Monomial quot{std::move(q)};
      F2Poly repl = m.eq_to_r(
          poly_add(F2Poly::var(m.eqTable(), m.eq_dvar(red->i, red->j - 1)),
                   m.cx(red->i, red->j - 1)));
      delta = poly_add(delta, poly_mul_monomial(repl, quot, t));
    }
    cur = poly_add(cur, delta);
  }
  RElem out{F2Poly::zero(m.eqTable()), F2Poly::zero(m.rTable())};
  for (const auto &mon : cur.terms()) {
    int k = mon.exponent(evar);
    if (k == 0) {
      out.f0.toggle(Monomial(mon.factors())); // same layout, no e present
    } else {
      std::vector<Monomial::Factor> q;
      for (auto [v, e] : mon.factors()) {
        int drop = v == evar ? 1 : 0;
        if (e - drop > 0)
          q.push_back({v, static_cast<uint16_t>(e - drop)});
      }
      out.f1.toggle(Monomial(std::move(q)));
    }
  }
  return out;
}

bool r_is_normal(const Model &m, const F2Poly &expr) {
  RewritePolicy p;
  return !find_reducible(m, expr, p).has_value();
}

RCoords r_embed(const Model &m, const F2Poly &expr, int d0_premul,
                int seriesHi) {
  TruncCtx t{2 * m.Nctx()};
  const int evar = m.r_evar();
  const int d0 = m.phi_dvar(0);
  const size_t gens = m.gen_count();

  RCoords out{F2Poly::zero(m.phiTable()), F2Poly::zero(m.phiETable())};
  for (const auto &mon : expr.terms()) {
    int epow = 0;
    F2Poly lau = F2Poly::one(m.phiTable());
    ESeries ser = ESeries::constant(F2Poly::one(m.B()), seriesHi);
    for (const auto &[v, e] : mon.factors()) {
      if (v == evar) {
        epow = e;
        continue;
      }
      if (v < gens) {
        const F2Poly &repr = m.gen_repr(v);
        lau = poly_mul(lau, poly_pow(m.b_to_phi(repr), e, t), t);
        ser = eseries_scale(ser, poly_pow(repr, e, t), t);
        continue;
      }
      auto [i, j] = m.dvar_index(v);
      lau = poly_mul(lau, poly_pow(m.eps_d_pullback(i, j), e, t), t);
      ESeries row(m.B(), 0, seriesHi);
      for (int l = 0; l <= seriesHi; ++l)
        row.set_coeff(l, m.fgl().c(i, j + l));
      for (int rep = 0; rep < e; ++rep)
        ser = eseries_mul(ser, row, TruncCtx{m.Nctx()});
    }
    if (epow > d0_premul)
      throw WindowInsufficient("r_embed: e-power above premultiplier");
    lau = poly_mul_monomial(lau, Monomial::var(d0, d0_premul - epow), t);
    out.laurent = poly_add(out.laurent, lau);
    // flatten the series with the e-shift applied
    for (int l = ser.lo(); l <= ser.hi(); ++l) {
      int k = l + epow;
      if (k > seriesHi)
        continue;
      F2Poly piece = poly_mul_monomial(m.phi_to_phiE(m.b_to_phi(ser.coeff(l))),
                                       Monomial::var(m.phiE_evar(), k), t);
      out.series = poly_add(out.series, piece);
    }
  }
  return out;
}

bool r_equal(const Model &m, const RElem &a, const RElem &b) {
  F2Poly wa = a.whole(m), wb = b.whole(m);
  int emax = 0, wmax = 1;
  for (const F2Poly *p : {&wa, &wb})
    for (const auto &mon : p->terms())
      for (const auto &[v, e] : mon.factors()) {
        if (v == m.r_evar())
          emax = std::max(emax, static_cast<int>(e));
        else
          wmax = std::max(wmax, m.rTable()->weight(v));
      }
  // the e-expansion of a variable of weight w reaches c entries of degree
  // w + l, so the shared window tops out at Nctx - wmax
  int seriesHi = m.Nctx() - wmax;
  if (seriesHi < 0)
    throw TruncationExceeded("r_equal: no certified comparison window");
  RCoords ca = r_embed(m, wa, emax, seriesHi);
  RCoords cb = r_embed(m, wb, emax, seriesHi);
  return ca == cb;
}

// ---------------------------------------------------------------------------
// e-regularity
// ---------------------------------------------------------------------------

namespace {

// Normal-form monomials of weighted degree n with e-exponent <= window, over
// the r table, paired with x-monomial coefficients.
std::vector<Monomial> nf_slice(const Model &m, int n, int window) {
  std::vector<Monomial> out;
  const VarTable &X = *m.omega().X();
  const VarTable &D = *m.dPairTable();
  const size_t gens = m.gen_count();

  auto with_coeffs = [&](const Monomial &tail, int tailDeg) {
    int rest = n - tailDeg;
    if (rest < 0)
      return;
    for (const auto &xm : monomials_of_degree(X, rest))
      out.push_back(Monomial(xm.factors()).times(tail));
  };

  // f0 type: plain d-monomials
  for (int delta = 0; delta <= n; ++delta) {
    for (const auto &dm : monomials_of_degree(D, delta)) {
      std::vector<Monomial::Factor> shifted;
      for (auto [v, e] : dm.factors())
        shifted.push_back({static_cast<uint16_t>(v + gens), e});
      with_coeffs(Monomial(std::move(shifted)), delta);
    }
  }
  // f1 type: e^k times a monomial in the d(i,0) only, k >= 1
  std::vector<int> dzero; // d-pair var indices with j = 0
  for (size_t v = 0; v < D.size(); ++v) {
    auto [i, j] = m.dvar_index(static_cast<int>(v) + gens);
    if (j == 0)
      dzero.push_back(static_cast<int>(v));
  }
  auto dzT = std::make_shared<VarTable>();
  for (int v : dzero)
    dzT->add(D.name(v), D.weight(v));
  for (int k = 1; k <= window; ++k) {
    // the d(i,0) part has degree at most n + k, the rest is coefficient
    for (int ddeg = 0; ddeg <= n + k; ++ddeg) {
      for (const auto &dm : monomials_of_degree(*dzT, ddeg)) {
        std::vector<Monomial::Factor> shifted;
        for (auto [v, e] : dm.factors())
          shifted.push_back(
              {static_cast<uint16_t>(dzero[v] + gens), e});
        Monomial tail = Monomial(std::move(shifted))
                            .times(Monomial::var(m.r_evar(), k));
        with_coeffs(tail, ddeg - k);
      }
    }
  }
  return out;
}

} // namespace

ERegReport check_e_regular(const Model &m, int n, int window,
                           const RewritePolicy &policy) {
  ERegReport rep;
  rep.degree = n;
  rep.window = window;
  TruncCtx t{2 * m.Nctx()};

  if (n + window > m.Nd())
    throw TruncationExceeded("check_e_regular: slice needs generators up to "
                             "degree " +
                             std::to_string(n + window));
  auto slice = nf_slice(m, n, window);
  rep.slice_dim = static_cast<int>(slice.size());
  // d-variables in the slice weigh at most n + window
  int seriesHi = m.Nctx() - (n + window);
  if (seriesHi < 0)
    throw TruncationExceeded("check_e_regular: no certified window");
  int premul = window + 2;

  // faithfulness of the coordinates on the slice itself
  std::vector<RCoords> self, mapped;
  for (const auto &mon : slice) {
    F2Poly v = F2Poly::of(m.rTable(), {mon});
    self.push_back(r_embed(m, v, premul, seriesHi));
    F2Poly ev = poly_mul_monomial(v, Monomial::var(m.r_evar()), t);
    RElem nf = r_normal_form(m, ev, policy);
    mapped.push_back(r_embed(m, nf.whole(m), premul, seriesHi));
  }

  auto rank_of = [&](const std::vector<RCoords> &vecs) {
    MonomialIndex li(m.phiTable()), si(m.phiETable());
    for (const auto &v : vecs) {
      li.intern_all(v.laurent);
      si.intern_all(v.series);
    }
    GF2Solver solver(li.size() + si.size());
    int rank = 0;
    for (const auto &v : vecs) {
      BitVec row(li.size() + si.size());
      for (const auto &mon : v.laurent.terms())
        row.set(li.index_of(mon));
      for (const auto &mon : v.series.terms())
        row.set(li.size() + si.index_of(mon));
      if (solver.add(std::move(row)))
        ++rank;
    }
    return rank;
  };

  rep.embed_rank = rank_of(self);
  rep.e_rank = rank_of(mapped);
  return rep;
}

// ---------------------------------------------------------------------------
// Tate square
// ---------------------------------------------------------------------------

namespace {

struct TateSlice {
  int target_dim = 0;
  int source_dim = 0;
  int rank = 0;
};

TateSlice tate_slice(const Model &m, int n, int K) {
  if (n + K > m.Nctx())
    throw WindowInsufficient("check_tate_square: need coefficients up to "
                             "degree " +
                             std::to_string(n + K) + " > " +
                             std::to_string(m.Nctx()));
  TruncCtx t{m.Nctx()};
  TateSlice out;

  // column indexing: exponent k in [-K, K] times b-monomials of degree n+k
  MonomialIndex columns(m.phiETable());
  auto intern_series = [&](const ESeries &s) {
    for (int k = std::max(s.lo(), -K); k <= K; ++k) {
      F2Poly c = m.phi_to_phiE(m.b_to_phi(s.coeff(k)));
      for (const auto &mon : c.terms())
        columns.intern(mon.times(Monomial::var(m.phiE_evar(), K + k)));
    }
  };
  // the e-exponent is shifted by +K so the index variable stays nonnegative

  std::vector<ESeries> sources;
  // homotopy fixed points: basis elements omega * e^k
  for (int k = 0; k <= K; ++k) {
    for (const F2Poly &w : m.omega().basis(n + k)) {
      ESeries s(m.B(), k, K);
      s.set_coeff(k, w);
      sources.push_back(std::move(s));
    }
  }
  // geometric side: omega * phi(D) for d-monomials D of degree <= n
  auto dT = std::make_shared<VarTable>();
  for (int i = 0; i + 1 <= n; ++i)
    dT->add("d" + std::to_string(i), i + 1);
  for (int delta = 0; delta <= n; ++delta) {
    std::vector<Monomial> dmons = monomials_of_degree(*dT, delta);
    for (const auto &dm : dmons) {
      ESeries prod = ESeries::constant(F2Poly::one(m.B()), m.Nctx());
      for (auto [v, e] : dm.factors()) {
        ESeries row = m.phi_row(v);
        for (int rep = 0; rep < e; ++rep)
          prod = eseries_mul(prod, row, t);
      }
      if (prod.hi() < K)
        throw WindowInsufficient("check_tate_square: product window");
      for (const F2Poly &w : m.omega().basis(n - delta))
        sources.push_back(eseries_scale(prod, w, t).restricted(-K, K));
    }
  }

  for (const auto &s : sources)
    intern_series(s);

  out.source_dim = static_cast<int>(sources.size());
  for (int k = -std::min(K, n); k <= K; ++k)
    out.target_dim += m.omega().dim(n + k);

  GF2Solver solver(columns.size());
  for (const auto &s : sources) {
    BitVec row(columns.size());
    for (int k = std::max(s.lo(), -K); k <= K; ++k) {
      F2Poly c = m.phi_to_phiE(m.b_to_phi(s.coeff(k)));
      for (const auto &mon : c.terms())
        row.set(columns.index_of(
            mon.times(Monomial::var(m.phiE_evar(), K + k))));
    }
    if (solver.add(std::move(row)))
      ++out.rank;
  }
  return out;
}

} // namespace

TateReport check_tate_square(const Model &m, int n, int window) {
  TateReport rep;
  rep.degree = n;
  rep.window = window;
  TateSlice base = tate_slice(m, n, window);
  rep.target_dim = base.target_dim;
  rep.source_dim = base.source_dim;
  rep.rank = base.rank;
  rep.kernel_dim = base.source_dim - base.rank;
  rep.surjective = base.rank == base.target_dim;

  TateSlice next = tate_slice(m, n, window + 1);
  rep.kernel_dim_next = next.source_dim - next.rank;
  bool next_surjective = next.rank == next.target_dim;
  rep.stable =
      rep.kernel_dim_next == rep.kernel_dim && next_surjective == rep.surjective;
  return rep;
}

} // namespace cobord
