#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace su2para {

using cplx = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Spins are half-integers stored exactly as 2j.
inline int dim_of(int two_j) { return two_j + 1; }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

// The bi-invariant metric is -kappa * Killing.  All spectral scales read the
// value from here; kappa = 1 gives the Casimir eigenvalue j(j+1)/2.
double metric_kappa();
void set_metric_kappa(double kappa);

// lambda_j = j(j+1)/(2 kappa), |xi| = sqrt(lambda_j), <xi> = sqrt(1+lambda_j).
inline double casimir_eigenvalue(int two_j) {
  const double j = 0.5 * two_j;
  return j * (j + 1.0) / (2.0 * metric_kappa());
}
inline double xi_norm(int two_j) { return std::sqrt(casimir_eigenvalue(two_j)); }
inline double xi_bracket(int two_j) {
  return std::sqrt(1.0 + casimir_eigenvalue(two_j));
}

// m runs ascending over -j..j; row index i <-> two_m = 2*i - two_j.
inline double m_of_index(int two_j, int i) { return 0.5 * (2 * i - two_j); }

}  // namespace su2para
