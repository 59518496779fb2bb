#ifndef COBORD_MODEL_HPP
#define COBORD_MODEL_HPP

#include <map>

#include "cobord/omega.hpp"
#include "cobord/series.hpp"

namespace cobord {

// ---------------------------------------------------------------------------
// A fully built computation context.
//
// N is the presentation degree: generators d(i,j) with i+j+1 <= N appear in
// dimension tables and relation checks. The coefficient side (B, a- and
// c-tables, omega bases) is carried to Nctx = N + K so that windowed Tate
// and homotopy-fixed-point slices of degree <= N stay exact, and the
// generator/expression range extends to Nd = N + sigmaReserve so that Gamma
// chains coming from sigma-weights up to sigmaReserve stay in range.
// ---------------------------------------------------------------------------

struct ModelParams {
  int N = 10;
  int K = -1; // e-window; -1 means N + 2
  int sigmaReserve = 4;
  bool verifyRecip = true; // assert F*(1/F)=1 while building the c-table

  int window() const { return K < 0 ? N + 2 : K; }
  int nctx() const { return N + window(); }
  int nd() const { return std::min(N + sigmaReserve, nctx()); }
};

class Model {
public:
  static Model build(const ModelParams &params);
  // Build on top of a previously computed (e.g. cached) context. The context
  // truncation must equal params.nctx().
  static Model build_from(const ModelParams &params, FglContext ctx);

  const ModelParams &params() const { return params_; }
  int N() const { return params_.N; }
  int K() const { return params_.window(); }
  int Nctx() const { return params_.nctx(); }
  int Nd() const { return params_.nd(); }

  const FglContext &fgl() const { return fgl_; }
  const OmegaBasis &omega() const { return omega_; }

  // Variable tables. eq: x-generators then d(i,j); phi: b's then d0,d1,...;
  // r: the eq table extended by the Euler class e of weight -1.
  const VarTablePtr &B() const { return fgl_.B; }
  const VarTablePtr &eqTable() const { return eqT_; }
  const VarTablePtr &phiTable() const { return phiT_; }
  const VarTablePtr &rTable() const { return rT_; }
  const VarTablePtr &phiETable() const { return phiET_; }
  const VarTablePtr &dPairTable() const { return dpairT_; }

  int gen_count() const { return static_cast<int>(omega_.generators().size()); }
  int eq_xvar(int g) const;              // -1 when no generator in degree g
  int eq_dvar(int i, int j) const;       // throws TruncationExceeded
  bool has_dvar(int i, int j) const;
  std::pair<int, int> dvar_index(int v) const; // eq var -> (i,j), i=0 for x
  int r_evar() const { return evar_; }
  int phi_dvar(int i) const;
  int phiE_evar() const { return phiE_evar_; }

  // c_{i,j} expressed in the x-generators, as a polynomial over the eq table.
  const F2Poly &cx(int i, int j) const;
  // The embedding image of d(i,j) in Omega_*[d0,d1,...].
  const F2Poly &eps_d(int i, int j) const;
  // The pullback-coordinate image: eps_d plus the interior negative entries
  // sum_{-i-1<m<0} c_{i,m} d0^{j-m}. This is the localization leg of the
  // faithful coordinate pair on R.
  const F2Poly &eps_d_pullback(int i, int j) const;
  // Row i of the reciprocal table as a certified Laurent series over B.
  ESeries phi_row(int i) const;

  // Table moves.
  F2Poly b_to_phi(const F2Poly &p) const;  // B -> phi (same leading layout)
  F2Poly x_to_eq(const F2Poly &p) const;   // omega X-table -> eq table
  F2Poly eq_to_r(const F2Poly &p) const;   // eq -> r (same layout plus e)
  F2Poly eq_x_part_to_X(const F2Poly &p) const; // d-free eq poly -> X table
  F2Poly phi_to_phiE(const F2Poly &p) const;

  // x-generator image in B (for substitution maps): indexed by eq var.
  const F2Poly &gen_repr(int xvar) const;

private:
  Model() = default;
  ModelParams params_;
  FglContext fgl_{nullptr, 0};
  OmegaBasis omega_;
  VarTablePtr eqT_, phiT_, rT_, phiET_, dpairT_;
  std::vector<std::pair<int, int>> dvars_; // (i,j) per d variable, eq order
  std::map<std::pair<int, int>, int> dvar_index_;
  std::map<std::pair<int, int>, F2Poly> cx_, eps_, epsPull_;
  int evar_ = -1;
  int phiE_evar_ = -1;
  int phi_d0_ = -1;
};

} // namespace cobord

#endif
