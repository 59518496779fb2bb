#ifndef COBORD_FIXED_POINTS_HPP
#define COBORD_FIXED_POINTS_HPP

#include <random>

#include "cobord/model.hpp"

namespace cobord {

// ---------------------------------------------------------------------------
// Maps into the Tate ring Omega_*((e)).
// ---------------------------------------------------------------------------

// Image of a polynomial in Omega_*[d0,d1,...] under d_i -> sum_j c_{i,j} e^j,
// restricted to the window [lo, hi]; throws WindowInsufficient when the
// certified windows cannot cover it.
ESeries phi_map(const Model &m, const F2Poly &phi_elt, int lo, int hi);

// Localization Omega_*[[e]] -> Omega_*((e)) is the window-preserving
// inclusion.
inline ESeries hfp_to_tate(const ESeries &h) { return h; }

// ---------------------------------------------------------------------------
// The ring R = Omega_*[e, d(i,j)] / (d(i,j) + c_{i,j} + e d(i,j+1)), with
// normal form f0(d(i,j)) + e f1(d(i,0), e).
// ---------------------------------------------------------------------------

struct RElem {
  F2Poly f0; // over the eq table: no e
  F2Poly f1; // over the r table: only e and the d(i,0)

  F2Poly whole(const Model &m) const; // f0 + e*f1 over the r table
};

struct RewritePolicy {
  // When set, rewrite steps pick a random eligible d-factor instead of the
  // first one (order-independence checks).
  std::mt19937_64 *rng = nullptr;
  // Negative control: treat e*d(1,0) as zero (a deliberately wrong relation).
  bool fake_kill_ed10 = false;
};

// Terminating rewriting by e*d(i,j) -> d(i,j-1) + c_{i,j-1} for j >= 1.
RElem r_normal_form(const Model &m, const F2Poly &expr,
                    const RewritePolicy &policy = {});

bool r_is_normal(const Model &m, const F2Poly &expr);

// Faithful coordinates of an R element: the image in Omega_*[d0^{+-1},...]
// premultiplied by d0^{d0_premul}, and the e-expansion on [0, seriesHi].
struct RCoords {
  F2Poly laurent; // over the phi table
  F2Poly series;  // over the phiE table (phi plus e)
  bool operator==(const RCoords &o) const {
    return laurent == o.laurent && series == o.series;
  }
};

RCoords r_embed(const Model &m, const F2Poly &expr, int d0_premul,
                int seriesHi);

// Both localization and completion images agree.
bool r_equal(const Model &m, const RElem &a, const RElem &b);

// ---------------------------------------------------------------------------
// Degreewise verification reports.
// ---------------------------------------------------------------------------

struct ERegReport {
  int degree = 0;
  int window = 0;
  // normal-form monomials spanning the windowed slice; the presentation
  // relations make this an overcount of the true dimension from degree 6 on
  int slice_dim = 0;
  int embed_rank = 0; // true dimension of the embedded slice
  int e_rank = 0;     // rank after multiplying by e
  bool ok() const { return embed_rank > 0 && e_rank == embed_rank; }
};

// Checks that multiplication by e has zero kernel on the degree-n slice of
// normal forms with e-exponent <= window.
ERegReport check_e_regular(const Model &m, int n, int window,
                           const RewritePolicy &policy = {});

struct TateReport {
  int degree = 0;
  int window = 0;     // e-exponents in [-window, window]
  int target_dim = 0; // windowed Tate slice
  int source_dim = 0; // hfp slice + phi slice
  int rank = 0;
  int kernel_dim = 0;
  bool surjective = false;
  // same kernel and surjectivity at window+1
  bool stable = false;
  int kernel_dim_next = -1;
};

// Verifies surjectivity of Omega_*[[e]]_n + Omega_*[d0,...]_n onto the
// windowed Tate slice and computes the kernel dimension.
TateReport check_tate_square(const Model &m, int n, int window);

} // namespace cobord

#endif
