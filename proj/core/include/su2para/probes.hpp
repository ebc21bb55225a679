#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "su2para/operators.hpp"
#include "su2para/paradiff.hpp"
#include "su2para/symbol.hpp"
#include "su2para/types.hpp"

namespace su2para {

// ---- multiplier decay fits ---------------------------------------------------

// Difference-calculus order of radial multipliers h((1+|xi|^2/t^2)^{1/2}-type):
// for a(xi) = (1 + |xi|^2/t^2)^{m/2} Id and every multi-index |beta| <= 2,
// fit log ||D^beta a(xi)|| against log <xi> over two_j in [two_lo, two_hi].
// Claimed slope: m - |beta|.
struct DecayRow {
  std::array<int, 3> beta{0, 0, 0};
  double slope = 0.0;
  double expected = 0.0;
};
std::vector<DecayRow> multiplier_decay_probe(double m, double t, int two_lo,
                                             int two_hi);

// ---- weight-power chain identity ----------------------------------------------

// Residual of the first-order chain rule for powers of the weight k = |xi|:
//   D_q(k^m) - m k^{m-1} D_q k,
// per admissible coordinate component, degree norms maximized over the
// components.  m = 1 makes the residual vanish identically (reported as the
// raw data norm); otherwise the fitted slope should drop to m - 2.
struct WeightChainReport {
  double m = 0.0;
  bool exact = false;        // m == 1: residual is identically zero
  double residual_norm = 0;  // data norm of the residual (m == 1 case)
  DecayFit fit;              // slope of the residual degree norms otherwise
  double expected = 0.0;     // m - 2
};
WeightChainReport weight_chain_probe(double m, int two_band, int two_lo,
                                     int two_hi);

// ---- quasi-homogeneous functional calculus ------------------------------------

// Exercises kappa^m f(b / kappa) for b = d xi(X) frames:
//   f == 1        reproduces the plain multiplier |xi|^m exactly;
//   f(z) = z, m=0 reproduces b / kappa (order-0 fit and direct comparison);
//   f(z)=1/(1-z)  matches geometric partial sums for a small argument;
//   [qh(f,1,b1), sigma_X] drops one order below the naive sum (slope <= 1).
struct QhReport {
  double const_rel_error = 0.0;
  double linear_rel_error = 0.0;
  double linear_slope = 0.0;  // claimed 0
  double series_rel_error = 0.0;
  double commutator_slope = 0.0;
  double commutator_claim = 1.0;  // m + m' - 1
};
QhReport quasi_homogeneous_probe(int two_band, int two_lo, int two_hi);

// ---- rough vs regularized quantization -----------------------------------------

// Order-0 symbols of unit size whose x-frequency at every degree sits on the
// resonant line |eta| = |xi| (no spectral condition) versus the same profile
// placed inside the |eta| <= (delta/2) <xi> cone.  H^{-1} -> H^{-1} operator
// norms per ambient band: the resonant family may grow with the band, the
// cone family must stay bounded.
struct RoughQuantReport {
  std::vector<int> bands;
  std::vector<double> resonant;
  std::vector<double> cone;
  double delta = 0.0;
};
RoughQuantReport rough_quantization_probe(const std::vector<int>& two_bands,
                                          double delta, int max_iter = 80,
                                          double rel_tol = 3e-3);

// ---- paraproduct norm stability -------------------------------------------------

// ||T_a||_{H^s -> H^s} / sup|a| per band and Sobolev index, the Bony-split
// reconstruction residual at a modest band, and the remainder's smoothing
// norm ||R(a, .)||_{H^0 -> H^1} per band (one-derivative gain for a
// Zygmund-1 coefficient).
struct ParaNormReport {
  std::vector<double> s;
  std::vector<int> bands;
  MatrixXd norm_over_sup;         // row: s index, col: band index
  std::vector<double> smoothing;  // per band
  double recon_residual = 0.0;
  double coeff_sup = 0.0;
};
ParaNormReport paraproduct_norm_probe(const std::vector<double>& s_vals,
                                      const std::vector<int>& two_bands,
                                      double gap, uint64_t seed,
                                      int max_iter = 80,
                                      double rel_tol = 3e-3);

// ---- Sobolev-pairing remainder probes --------------------------------------------

// Six remainder families, each measured two ways per ambient band:
//   mandated  = ||R||_{H^0 -> H^0}          (theorem pairing at s = 0, r = 1;
//                bounded across band doubling),
//   contrast  = ||R||_{H^1 -> H^0} on inputs in the top shell [band/2, band]
//                (unimproved pairing; decays like <xi_shell>^{-1}).
// Probes: smooth-compose, rough-compose, commutator, adjoint, cutoff-freedom,
// regularization-tail.  Coefficients are Zygmund-1 witnesses of x-band 8;
// regularizations use the canonical cutoff of the paraproduct gap.
struct PairingRow {
  std::string name;
  int two_band = 0;
  double mandated = 0.0;
  double contrast = 0.0;
  double shell_bracket = 0.0;  // <xi> at the contrast shell bottom
};
struct PairingReport {
  double gap = 8.0;
  int r = 1;
  std::vector<PairingRow> rows;
};
PairingReport pairing_probes(const std::vector<int>& two_bands, double gap,
                             uint64_t seed, int max_iter = 40,
                             double rel_tol = 3e-3);

// ---- spectral-condition closure ----------------------------------------------

// Largest |eta| / <xi> carrying more than rel_tol (relative, per degree) of
// the x-spectral mass: the effective cone width of a symbol.
double measured_delta(const Symbol& a, double rel_tol = 1e-12);

// Regularize a rough order-1 symbol at delta, then check: the result passes
// the cone test at delta; one coordinate difference keeps the width within
// the <xi> -> <xi -+ 1/2> drift; one x-derivative keeps it exactly.
struct ClosureReport {
  double delta = 0.0;
  double base_residual = 0.0;
  bool base_pass = false;
  double base_delta = 0.0;
  double diff_delta = 0.0;
  double deriv_delta = 0.0;
};
ClosureReport closure_probe(double delta, int two_band, uint64_t seed);

}  // namespace su2para
