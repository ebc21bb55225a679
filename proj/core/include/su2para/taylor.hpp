#pragma once

#include <array>
#include <vector>

#include "su2para/group.hpp"
#include "su2para/spectral.hpp"
#include "su2para/symbol.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Fundamental tuple q_{rc}(x) = tau_{rc}(x) - delta_{rc} built from the
// defining representation tau (degree two_j = 1).  Index order row-major:
// 0 -> (0,0), 1 -> (0,1), 2 -> (1,0), 3 -> (1,1).
struct FundamentalTuple {
  std::array<SpectralFunction, 4> q;
  // Components forming a coordinate system at the identity (the full tuple
  // is degenerate there: d(q_00 + q_11) = 0).  Row-major (r, c) pairs.
  static constexpr std::array<std::pair<int, int>, 3> coordinates = {
      {{0, 0}, {0, 1}, {1, 0}}};
};
FundamentalTuple fundamental_tuple();

// Value q_{rc}(y) straight from the group element (no transform).
cplx tuple_value(int r, int c, const GroupPoint& y);
// q^alpha(y) over the coordinate components, alpha a 3-multi-index.
cplx tuple_power(const std::array<int, 3>& alpha, const GroupPoint& y);

// Multiplication of x(y z) type arguments obeys the exact expansion
// q_{ij}(xy) = sum_k q_{ik}(x) q_{kj}(y) + q_{ij}(x) + q_{ij}(y);
// returns the max residual of that identity over the supplied pairs.
double leibniz_residual(
    const std::vector<std::pair<GroupPoint, GroupPoint>>& pairs);

// Taylor operators X^{(alpha)}: combinations of normal-ordered monomials
// X^beta = E1^{b1} E2^{b2} E3^{b3} (orthonormal basis fields) solving the
// biorthogonality system  [X^{(alpha)} q^{alpha'}](e) = delta_{alpha alpha'}
// over |alpha|, |alpha'| <= order - 1.  With inverse_argument set, the
// monomials are those of the tuple y -> q(y^{-1}) instead (on SU(2) exactly
// q~_00 = q_11, q~_01 = -q_01, q~_10 = -q_10); these duals give the expansion
// f(xy) = sum q^alpha(y^{-1}) X^{(alpha)} f(x) + O(dist^N) used by the
// composition and adjoint expansions.
struct TaylorOperators {
  int order = 0;                              // N
  bool inverse_argument = false;
  std::vector<std::array<int, 3>> alphas;     // all |alpha| <= N-1
  MatrixXcd coeff;                            // coeff(alpha_idx, beta_idx)
  std::vector<std::array<int, 3>> betas;      // monomial exponents
  double biorth_residual = 0.0;
  double moment_condition = 0.0;              // singular value ratio of moments
};
TaylorOperators taylor_operators(int order, bool inverse_argument = false);

// X^beta f (normal-ordered monomial) and X^{(alpha)} f, spectral and exact.
SpectralFunction apply_monomial(const std::array<int, 3>& beta,
                                const SpectralFunction& f);
SpectralFunction apply_taylor_op(const TaylorOperators& ops, int alpha_idx,
                                 const SpectralFunction& f);
// Same operators acting on the x-slot of a symbol.
Symbol apply_taylor_op_x(const TaylorOperators& ops, int alpha_idx,
                         const Symbol& a);

// f(y) - sum_alpha q^alpha(y) [X^{(alpha)} f](e); decays like dist(e,y)^N.
// For inverse-argument operators the monomials are evaluated at y^{-1}.
cplx taylor_remainder(const TaylorOperators& ops, const SpectralFunction& f,
                      const GroupPoint& y);

}  // namespace su2para
