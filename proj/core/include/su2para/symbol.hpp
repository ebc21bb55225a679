#pragma once

#include <functional>
#include <vector>

#include "su2para/clebsch.hpp"
#include "su2para/irreps.hpp"
#include "su2para/spectral.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Symbol a(x, xi): for each degree two_j <= xi_band, a dim x dim matrix of
// band-limited functions of x, stored through their x-Fourier coefficients.
//
// Storage layout, per (two_j, two_eta):  a vector T of length d_eta^2,
// indexed a * d_eta + b, with T[a*d_eta+b](w, v) = hat{a_{wv}}(eta)_{ab}.
// The (w, v) slots are the matrix indices on the representation space of xi;
// (a, b) are x-frequency indices.  This shape feeds the quantized-operator
// contraction without reshuffling.
class Symbol {
 public:
  Symbol() = default;
  Symbol(int two_xi_band, int two_x_band);

  int xi_band() const { return two_xi_band_; }
  int x_band() const { return two_x_band_; }

  std::vector<MatrixXcd>& tensor(int two_j, int two_eta);
  const std::vector<MatrixXcd>& tensor(int two_j, int two_eta) const;

  // x-Fourier coefficient matrix of the (w, v) entry at degree eta
  // (d_eta x d_eta, index order [a][b]), assembled from the tensor layout.
  MatrixXcd entry_coeff(int two_j, int two_eta, int w, int v) const;
  void set_entry_coeff(int two_j, int two_eta, int w, int v,
                       const MatrixXcd& coeff);

  // The (x-dependent) matrix a(x, xi_j) evaluated at a group point.
  MatrixXcd at(const GroupPoint& x, int two_j) const;

  Symbol& operator+=(const Symbol& other);
  Symbol& operator*=(double c);

  // Frobenius-type size of all stored data (diagnostics, zero tests).
  double data_norm() const;

 private:
  int two_xi_band_ = -1;
  int two_x_band_ = -1;
  // data_[two_j][two_eta] = tensor described above
  std::vector<std::vector<std::vector<MatrixXcd>>> data_;
};

// ---- constructors ----------------------------------------------------------

// a(x, xi) = h(|xi_j|) Id  (radial Fourier multiplier; x-band 0).
Symbol multiplier_symbol(const std::function<double(double)>& h,
                         int two_xi_band);
// a(x, xi) = d xi(X)  (left-invariant vector field X; x-band 0).
Symbol vector_field_symbol(const Matrix2cd& X, int two_xi_band);
// a(x, xi) = c(x) Id  (multiplication by a function).
Symbol coefficient_symbol(const SpectralFunction& c, int two_xi_band);
// a(x, xi) = c(x) d xi(X).
Symbol coefficient_field_symbol(const SpectralFunction& c, const Matrix2cd& X,
                                int two_xi_band);

// ---- calculus on symbols ---------------------------------------------------

// Left-invariant x-derivative: entries a_{wv}(., xi) -> X a_{wv}(., xi).
Symbol x_derivative(const Symbol& a, const Matrix2cd& X);

// RT difference operator for one component q_{rc} = tau_{rc} - delta_{rc} of
// the fundamental tuple (tau = defining representation, indices rc in {0,1}).
// Exact via Clebsch-Gordan data; shifts degree support by +-1/2.
Symbol difference_op(const Symbol& a, int r, int c);

// D^beta over the admissible coordinate components (q_11, q_12, q_21),
// beta = (b1, b2, b3) multi-index (components commute).
Symbol difference_power(const Symbol& a, const std::array<int, 3>& beta);

// Pointwise product (a b)(x, xi) = a(x, xi) b(x, xi), matrix product in xi,
// pointwise in x.  Dispatches: an x-constant factor multiplies coefficient
// blocks directly; otherwise the exact spectral route below.
Symbol symbol_product(const Symbol& a, const Symbol& b);

// Reference route: evaluate both factors on an x-grid of band
// x_band(a) + x_band(b) (product-exact) and transform the entries back.
Symbol symbol_product_grid(const Symbol& a, const Symbol& b);

// Exact spectral route: the x-dependence of each entry is multiplied through
// Clebsch-Gordan coupling of the x-coefficient blocks (no grid).  out_x_cap
// >= 0 truncates the output x-band (projection of the exact product); callers
// that regularize the result afterwards use it to bound cost and memory.
Symbol symbol_product_spectral(const Symbol& a, const Symbol& b,
                               int out_x_cap = -1);

// Entrywise adjoint a(x, xi) -> a(x, xi)^* (conjugate transpose at each x).
Symbol symbol_adjoint(const Symbol& a);

// ---- quantization ----------------------------------------------------------

// Reference quantization Op(a) f through grid evaluation:
//   (Op(a) f)(x) = sum_xi d_xi Tr( a(x, xi) hat{f}(xi) xi(x) ).
// Cost grows quickly with bands; used for cross-validation and small runs.
SpectralFunction quantize_grid(const Symbol& a, const SpectralFunction& f,
                               int out_two_band);

// Symbol of an abstract operator: sigma[A](x, xi) = xi(x)^* (A xi)(x), with
// apply(column entries of xi) supplied by the caller.
Symbol symbol_from_application(
    const std::function<SpectralFunction(const SpectralFunction&)>& apply,
    int two_xi_band, int two_x_band, int out_two_band);

// Convolution kernel k_a(x, y) = sum_xi d_xi Tr( a(x, xi) xi(y) ).
cplx conv_kernel(const Symbol& a, const GroupPoint& x, const GroupPoint& y);

// ---- size estimates --------------------------------------------------------

// sup_x || a(x, xi_j) ||_op per degree, estimated on an x-grid (power
// iteration on d x d matrices per node).
std::vector<double> per_degree_sup_norms(const Symbol& a);

// Least-squares slope of log(norm_j) against log(<xi_j>) over degrees with
// two_j in [two_lo, two_hi]; max_ratio = max norm_j / <xi_j>^slope_claimed.
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
};
DecayFit fit_decay(const std::vector<double>& norms, int two_lo, int two_hi);

// S^m_{1,1}-type class bound estimate:
//   max over |beta| <= k, |alpha| <= l of
//   sup_{x, j} <xi_j>^{-(m - |beta| + |alpha|)} ||X^alpha D^beta a(x, xi_j)||.
double class_norm(const Symbol& a, double m, int k, int l);

// Rough-class companion: x-regularity measured in the Zygmund scale instead
// of derivative sups,
//   max over |beta| <= l of sup_j <xi_j>^{|beta| - m} Z_r( a(., xi_j) ),
// where Z_r takes dyadic x-frequency shells of the entries, weights the shell
// sup by 2^{r k}, and sups over shells.
double rough_class_norm(const Symbol& a, double m, double r, int l);

// ---- quasi-homogeneous functional calculus ---------------------------------

// kappa^m f(b / kappa) with kappa = |xi| I; b should be a symbol whose values
// are normal matrices (e.g. anti-Hermitian vector-field combinations).
// f acts by eigenvalue calculus of i b / kappa (Hermitian); radius_check
// aborts if spectra escape |z| <= radius.
// out_two_x_band < 0 selects x_band(b) + 4 (or 0 for constant b); evaluation
// grids carry a margin so the truncation alias stays small for analytic f.
Symbol quasi_homogeneous(const std::function<cplx(cplx)>& f, const Symbol& b,
                         double m, double radius, int out_two_x_band = -1);

}  // namespace su2para
