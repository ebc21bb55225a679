#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "su2para/quadrature.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Matrix Fourier coefficients a(xi_j) for all 2j = 0..two_band.
// Conventions: fhat(xi) = int f(x) xi(x)^* dx, inversion
// f(x) = sum_j d_j tr(fhat(j) D^j(x)), Plancherel |f|_2^2 = sum_j d_j |fhat(j)|_F^2.
struct SpectralFunction {
  int two_band = 0;
  std::vector<MatrixXcd> coeff;

  static SpectralFunction zero(int two_band);
  MatrixXcd& block(int two_j) { return coeff[two_j]; }
  const MatrixXcd& block(int two_j) const { return coeff[two_j]; }
};

struct GridFunction {
  std::shared_ptr<const QuadratureGrid> grid;
  VectorXcd values;
};

// f(x) = D^{j}_{ab}(x) as spectral data: fhat(j) = E_{ba} / (2j+1).
SpectralFunction entry_function(int two_j, int a, int b);

SpectralFunction add(const SpectralFunction& f, const SpectralFunction& g);
SpectralFunction scaled(cplx s, const SpectralFunction& f);
// Per-block scalar multiplier h(two_j).
SpectralFunction scale_blocks(const SpectralFunction& f,
                              const std::function<double(int)>& h);
SpectralFunction truncated(const SpectralFunction& f, int two_band);

GridFunction inverse_transform(const SpectralFunction& f,
                               std::shared_ptr<const QuadratureGrid> grid);
// Requires grid bandlimit >= out_two_band.
SpectralFunction forward_transform(const GridFunction& f, int out_two_band);

cplx evaluate(const SpectralFunction& f, const GroupPoint& g);
cplx evaluate(const SpectralFunction& f, const EulerAngles& e);

double plancherel_norm(const SpectralFunction& f);
double sobolev_norm(const SpectralFunction& f, double s);
cplx l2_inner(const SpectralFunction& f, const SpectralFunction& g);
double l2_norm(const GridFunction& f);
double sup_norm(const GridFunction& f);

// (f*g)(x) = int f(y) g(y^{-1}x) dy by direct double summation; the spectral
// side satisfies hat(f*g) = ghat * fhat.  Quadratic in grid size; intended
// for modest bands.
GridFunction convolve(const GridFunction& f, const SpectralFunction& g);

// Band-growing operations report what they drop; callers choose out_band.
struct BandedResult {
  SpectralFunction fn;
  double discarded_rel = 0.0;  // relative Plancherel mass above out_band
};
BandedResult product(const SpectralFunction& f, const SpectralFunction& g,
                     int out_two_band);

// Exhaustive Schur orthogonality check of a grid against all irrep pairs up
// to its bandlimit; returns the max residual.
double verify_schur(const QuadratureGrid& grid);
// Exhaustive check up to a smaller band (cheaper).
double verify_schur(const QuadratureGrid& grid, int two_band);

}  // namespace su2para
