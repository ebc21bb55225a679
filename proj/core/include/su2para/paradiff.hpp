#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "su2para/operators.hpp"
#include "su2para/spectral.hpp"
#include "su2para/symbol.hpp"
#include "su2para/taylor.hpp"
#include "su2para/types.hpp"
#include "su2para/windows.hpp"

namespace su2para {

// Frequency cutoff chi(mu, lambda) acting on the x-frequency mu of a symbol
// at xi-frequency lambda (= |xi|): equals 1 below plateau_frac * delta * <l>
// and vanishes above delta * <l>, with <l> = sqrt(1 + lambda^2).  `gap`
// records the separation parameter of the paraproduct family it matches.
// Both factory routes verify the plateau/support/derivative-decay invariants
// on a lattice at construction and abort on violation.
struct AdmissibleCutoff {
  double delta = 0.25;
  double gap = 8.0;
  double plateau_frac = 0.5;  // verified plateau edge as a fraction of delta
  std::function<double(double, double)> chi;
  double operator()(double mu, double lambda) const { return chi(mu, lambda); }
  // chi sampled at the lattice (|eta|, |xi|), rows two_eta, cols two_j.
  MatrixXd table(int two_x_band, int two_xi_band) const;
};

// Scaled-window profile chi = phi(mu / (delta <l>)): plateau up to
// (delta/2) <l>, zero from delta <l>; the sharpest plateau/support pair.
AdmissibleCutoff admissible_cutoff(double delta, double gap = 8.0);

// The profile carried by the paraproduct of the same gap:
//   chi(mu, l) = int_1^inf phi(gap mu / t) psi(l / t) dt/t + phi(l) phi(gap mu)
// (the second term saturates the sub-unit scales).  Vanishes from
// delta <l> with delta = 2/gap; plateau verified up to (delta/8) <l>.
AdmissibleCutoff canonical_cutoff(double gap);

// a^chi: scale the x-frequency content of a(., xi) by chi(|eta|, |xi|).
Symbol regularize(const Symbol& a, const AdmissibleCutoff& chi);

// Relative x-spectral mass of a at pairs violating |eta| <= delta <xi>.
double spectral_condition_residual(const Symbol& a, double delta);
bool spectral_condition_check(const Symbol& a, double delta,
                              double tol = 1e-12);
struct SpectralConditionReport {
  double residual = 0.0;
  bool pass = true;
  std::vector<std::pair<int, int>> offending;  // (two_eta, two_j) above cut
};
SpectralConditionReport spectral_condition_report(const Symbol& a,
                                                  double delta,
                                                  double tol = 1e-12);

// ---- paraproduct kernels ---------------------------------------------------

// K_T(mu, lambda) = int_1^inf phi(gap mu / t) psi(lambda / t) dt/t: the total
// weight with which a coefficient x-frequency mu multiplies an argument
// frequency lambda inside T_a.  Panelled Gauss-Legendre over the support
// t in (max(1, lambda), 2 lambda).
double para_kernel(double gap, double mu, double lambda);
// K_T(0, lambda) = int_1^inf psi(lambda/t) dt/t = 1 - phi(lambda) exactly.
double para_kernel_low(double lambda);

// Kernel table over degree pairs; remainder weight is the complement
//   K_R(mu, lambda) = 1 - K_T(mu, lambda) - K_T(lambda, mu).
class ParaWeights {
 public:
  ParaWeights(double gap, int two_band_coeff, int two_band_arg);
  double coeff_weight(int two_eta, int two_j) const;  // K_T(|eta|, |xi_j|)
  double swap_weight(int two_eta, int two_j) const;   // K_T(|xi_j|, |eta|)
  double remainder_weight(int two_eta, int two_j) const;
  double gap() const { return gap_; }

 private:
  double gap_;
  MatrixXd k_;   // K_T(mu_eta, lambda_j), rows two_eta, cols two_j
  MatrixXd kt_;  // K_T(lambda_j, mu_eta) in the same shape
};

// ---- paraproducts ----------------------------------------------------------

// T_a u as a function, by kernel contraction over degree-block pairs:
//   sum_{eta,j} K_T(|eta|, |xi_j|) a_eta(x) u_j(x),
// evaluated on a product-exact grid and transformed to out_band.
SpectralFunction paraproduct(const SpectralFunction& a,
                             const SpectralFunction& u, double gap,
                             int out_band);

// Littlewood-Paley lattice route for the same object (independent oracle):
//   sum_k w_k [phi(gap |grad| / t_k) a] [psi_{t_k} u].
SpectralFunction paraproduct_lattice(const SpectralFunction& a,
                                     const SpectralFunction& u, double gap,
                                     int out_band, const LogLattice& lat);

// The same operator as a symbol: hat{a}(eta) weighted by K_T(|eta|, |xi|).
Symbol paraproduct_symbol(const SpectralFunction& a, int two_xi_band,
                          const ParaWeights& weights);

// u -> T_a u, u -> T_u a, u -> R(a, u) as matrix-free spectral operators
// (per-block kernel contraction through Clebsch-Gordan couplings; exact, no
// grid or truncation inside the apply beyond the out_band projection).
OpPtr para_operator(const SpectralFunction& a, double gap, int in_band,
                    int out_band);
OpPtr para_swap_operator(const SpectralFunction& a, double gap, int in_band,
                         int out_band);
OpPtr para_remainder_operator(const SpectralFunction& a, double gap,
                              int in_band, int out_band);

// Bony splitting a u = T_a u + T_u a + R(a, u) through the kernel route;
// the reconstruction residual compares the three parts' grid values against
// the plain pointwise product (relative L2 on the grid).
struct ParaDecomposition {
  SpectralFunction t_au, t_ua, remainder;
  double reconstruction_residual = 0.0;
};
ParaDecomposition para_decompose(const SpectralFunction& a,
                                 const SpectralFunction& u, double gap);

// ---- Bony linearization ----------------------------------------------------

// For a polynomial F(z) = sum_k coeffs[k] z^k:  F(u) = F(u_1) + Op(l_u) u
// with l_u(x, xi_j) = [int_1^inf F'(u_t)(x) psi(|xi_j|/t) dt/t] Id and
// u_t the phi-lowpass of u at scale t.  The t-integrals collapse into
// per-degree-tuple kernels, integrated by panelled Gauss-Legendre; cost
// grows like (band+1)^(deg-1), intended for low-degree profiles.
// residual_sup = sup |F(u) - F(u_1) - Op(l_u)u| on the grid, with Op(l_u)u
// computed through the quantization route.
struct BonyResult {
  Symbol l_u;
  SpectralFunction op_applied;  // quantize(l_u) applied to u
  double residual_sup = 0.0;
};
BonyResult bony_linearize(const std::vector<double>& coeffs,
                          const SpectralFunction& u);

// ---- symbolic calculus -----------------------------------------------------

// a #_r b = sum_{|alpha| <= r} D^alpha_q a . X^{(alpha)} b over the
// coordinate components of the fundamental tuple.  out_x_cap >= 0 projects
// every term onto x-degrees <= cap (callers regularize the result onto a
// narrower cone anyway; the cap bounds memory at large bands).
Symbol compose_sharp(const Symbol& a, const Symbol& b,
                     const TaylorOperators& ops, int r, int out_x_cap = -1);

// Adjoint expansion a^(*r) = sum_{|alpha| <= r} D^alpha_q X^{(alpha)} (a^*).
Symbol adjoint_sharp(const Symbol& a, const TaylorOperators& ops, int r);

}  // namespace su2para
