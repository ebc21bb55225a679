#pragma once

#include <functional>
#include <memory>

#include "su2para/spectral.hpp"
#include "su2para/symbol.hpp"
#include "su2para/types.hpp"

namespace su2para {

// A linear map between band-limited spaces, with its L2 adjoint.
class SpectralOperator {
 public:
  virtual ~SpectralOperator() = default;
  virtual int in_band() const = 0;    // accepted input band (two_j)
  virtual int out_band() const = 0;   // band of produced outputs
  virtual SpectralFunction apply(const SpectralFunction& f) const = 0;
  virtual SpectralFunction apply_adjoint(const SpectralFunction& g) const = 0;
};

using OpPtr = std::shared_ptr<const SpectralOperator>;

// Op(a) through the exact coupling contraction
//   hat{Op(a) f}(zeta)_{pq} = sum_{xi, eta} (d_xi d_eta / d_zeta)
//        sum hat{a}_{wv}(eta)_{ab} hat{f}(xi)_{vu} U[(b,u),q] U[(a,w),p],
// U = cg_matrix(eta, xi, zeta).  Output truncated at out_band; choosing
// out_band >= in_band + x_band(a) makes the application lossless.
OpPtr quantized_operator(Symbol a, int in_band, int out_band);

// Fourier multiplier h(|xi|).
OpPtr multiplier_operator(const std::function<double(double)>& h, int band);
// Pointwise multiplication f -> c f (banded, grid-exact).
OpPtr multiplication_operator(const SpectralFunction& c, int in_band,
                              int out_band);
// A after B, c1 A + c2 B, adjoint, identity-minus, band projection.
OpPtr compose_ops(OpPtr outer, OpPtr inner);
OpPtr lincomb_ops(cplx ca, OpPtr a, cplx cb, OpPtr b);
OpPtr adjoint_operator(OpPtr a);
// Projection onto degrees two_j in [two_lo, two_hi].
OpPtr shell_projection(int band, int two_lo, int two_hi);

// Operator norm H^{s_in} -> H^{s_out} restricted to inputs supported on
// degrees >= shell_two_lo, by power iteration on the weighted normal
// operator.  Deterministic for fixed seed.
struct NormEstimate {
  double norm = 0.0;
  int iterations = 0;
  bool converged = false;
};
NormEstimate operator_norm(const SpectralOperator& op, double s_in,
                           double s_out, int shell_two_lo = 0,
                           uint64_t seed = 1, int max_iter = 220,
                           double rel_tol = 5e-4);

// Dense matrix of the operator between Sobolev-normalized Plancherel bases
// (columns: inputs sqrt(d)<xi>^{-s_in} xi_{mn}; rows carry <zeta>^{s_out}).
// Exact reference for norms at small bands.
MatrixXcd dense_matrix(const SpectralOperator& op, double s_in, double s_out);

}  // namespace su2para
