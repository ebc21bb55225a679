#pragma once

#include <array>

#include "su2para/group.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Little-d matrix exp(-i beta J2) in the ascending-m basis; real orthogonal.
// Built from the cached spectral factorization of J2, stable for all bands
// used here.
MatrixXd wigner_d(int two_j, double beta);

// D^j_{mn}(alpha,beta,gamma) = exp(-i m alpha) d^j_{mn}(beta) exp(-i n gamma).
// wigner_D(1, g) is g's own matrix.
MatrixXcd wigner_D(int two_j, const EulerAngles& e);
MatrixXcd wigner_D(int two_j, const GroupPoint& g);

// Angular momentum matrices in the ascending basis, k = 1,2,3; J3 = diag(m).
MatrixXcd angular_momentum(int two_j, int k);

// Basis of su(2) orthonormal for the -kappa*Killing metric,
// E_k = -i sigma_k / (2 sqrt(2 kappa)); [E_i,E_j] = f eps_{ijk} E_k.
struct LieAlgebraBasis {
  std::array<Eigen::Matrix2cd, 3> E;
  double structure_constant;
};
LieAlgebraBasis lie_algebra_basis();

// Differential of the spin-j representation, complex-linear in X; X must be
// traceless.  drep(1, X) = X and exp(t drep(j,X)) = wigner_D(j, exp(tX)).
MatrixXcd drep(int two_j, const Eigen::Matrix2cd& X);

// Left-invariant derivative of the entry functions: D^j(g) drep(j, X).
MatrixXcd entry_derivative(int two_j, const GroupPoint& g,
                           const Eigen::Matrix2cd& X);

inline double laplace_eigenvalue(int two_j) { return casimir_eigenvalue(two_j); }

// eps with conj(D^j(g)) = eps D^j(g) eps^{-1}; used by conjugation tests and
// the adjoint machinery.
MatrixXd conjugation_intertwiner(int two_j);

}  // namespace su2para
