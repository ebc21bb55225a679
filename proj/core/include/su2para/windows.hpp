#pragma once

#include <functional>
#include <vector>

#include "su2para/quadrature.hpp"
#include "su2para/spectral.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Smooth even low-pass window: phi = 1 on [0, 1/2], phi = 0 on [1, inf),
// C^infinity glue in between (exp(-1/x) smoothstep).
double phi_window(double x);
// psi(x) = -x phi'(x); integral over dt/t of psi(lambda/t) telescopes phi.
double psi_window(double x);
// theta = phi(x/2) - phi(x): one dyadic annulus, support [1/2, 2].
double theta_window(double x);

// Composite Gauss-Legendre lattice for integrals  int_{t_lo}^{t_hi} f(t) dt/t:
// log-uniform panels (panels_per_octave per factor of 2), fixed-order GL on
// each panel.  sum_k w[k] f(t[k]) approximates the integral.
struct LogLattice {
  std::vector<double> t, w;
};
LogLattice log_lattice(double t_lo, double t_hi, int panels_per_octave,
                       int points_per_panel = 8);

// Apply the radial Fourier multiplier h(|xi|) blockwise.
SpectralFunction multiplier_apply(const SpectralFunction& f,
                                  const std::function<double(double)>& h);

// Littlewood-Paley pieces: lowpass phi(|xi|/t) f, band psi(|xi|/t) f,
// dyadic annulus theta(|xi|/2^k) f.
SpectralFunction lp_lowpass(const SpectralFunction& f, double t);
SpectralFunction lp_band(const SpectralFunction& f, double t);
SpectralFunction lp_dyadic(const SpectralFunction& f, int k);

// Smallest t with phi(|xi_j|/t) = 1 for every degree of the band (all
// frequencies inside the plateau); lattice upper ends use a margin above it.
double lowpass_saturation_t(int two_band);

// || f - phi_1 f - sum_k w_k psi_{t_k} f ||_{L2} / ||f||_{L2}: quadrature
// fidelity of the continuous LP reconstruction on the lattice.
double lp_reconstruction_residual(const SpectralFunction& f,
                                  const LogLattice& lat);

// Square-function H^s estimator:
//   sqrt( ||phi_1 f||^2 + sum_k w_k t_k^{2s} ||psi_{t_k} f||^2 ).
double lp_square_norm(const SpectralFunction& f, double s,
                      const LogLattice& lat);

// sup |f| on the grid of its own band; used by Zygmund-type norms.
double grid_sup(const SpectralFunction& f);

// Zygmund C^r_* norm estimator: sup|phi_1 f| + sup_k t_k^r sup|psi_{t_k} f|.
double zygmund_norm(const SpectralFunction& f, double r, const LogLattice& lat);

// Bernstein quotient ||f||_{H^s} / (t^s ||f||_{L2}) where t is the top
// frequency |xi| present in f.  For s >= 0 it stays below a uniform constant
// (<= ( <t> / t )^s on a single shell); that is the Bernstein inequality.
double bernstein_check(const SpectralFunction& f, double s);

// Convolution kernel profile of the multiplier h(|xi|/t): L1 mass and
// r-th distance moment, estimated on a quadrature grid.
struct KernelProfile {
  double l1 = 0.0;        // int |k_t| dmu
  double dist_l1 = 0.0;   // int dist(x, e)^r |k_t| dmu
};
KernelProfile kernel_profile(const std::function<double(double)>& h, double t,
                             int two_band, int grid_two_band, double r = 1.0);

}  // namespace su2para
