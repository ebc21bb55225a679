#include "su2para/irreps.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace su2para {

namespace {

struct RepTables {
  MatrixXcd J1, J2, J3;
  MatrixXcd V;    // eigenvectors of J2
  VectorXd mval;  // eigenvalues of J2 (= m, ascending)
};

const RepTables& rep_tables(int two_j) {
  static std::mutex mu;
  static std::map<int, RepTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(two_j);
  if (it != cache.end()) return it->second;

  require(two_j >= 0, "spin label 2j must be nonnegative");
  const int d = dim_of(two_j);
  const double j = 0.5 * two_j;
  MatrixXcd jp = MatrixXcd::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) {
    const double m = m_of_index(two_j, i);
    jp(i + 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  RepTables t;
  t.J1 = 0.5 * (jp + jp.adjoint());
  t.J2 = cplx(0.0, -0.5) * (jp - jp.adjoint());
  t.J3 = MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) t.J3(i, i) = m_of_index(two_j, i);

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(t.J2);
  require(es.info() == Eigen::Success, "J2 eigendecomposition failed");
  t.V = es.eigenvectors();
  t.mval = es.eigenvalues();
  return cache.emplace(two_j, std::move(t)).first->second;
}

}  // namespace

MatrixXd wigner_d(int two_j, double beta) {
  const RepTables& t = rep_tables(two_j);
  const int d = dim_of(two_j);
  VectorXcd phase(d);
  for (int i = 0; i < d; ++i) phase(i) = std::polar(1.0, -beta * t.mval(i));
  MatrixXcd out = t.V * phase.asDiagonal() * t.V.adjoint();
  return out.real();
}

MatrixXcd wigner_D(int two_j, const EulerAngles& e) {
  const int d = dim_of(two_j);
  MatrixXd dm = wigner_d(two_j, e.beta);
  MatrixXcd out(d, d);
  VectorXcd pa(d), pg(d);
  for (int i = 0; i < d; ++i) {
    const double m = m_of_index(two_j, i);
    pa(i) = std::polar(1.0, -m * e.alpha);
    pg(i) = std::polar(1.0, -m * e.gamma);
  }
  out = pa.asDiagonal() * dm * pg.asDiagonal();
  return out;
}

MatrixXcd wigner_D(int two_j, const GroupPoint& g) {
  if (two_j == 0) return MatrixXcd::Ones(1, 1);
  if (two_j == 1) return g.matrix();
  return wigner_D(two_j, to_euler(g));
}

MatrixXcd angular_momentum(int two_j, int k) {
  const RepTables& t = rep_tables(two_j);
  require(k >= 1 && k <= 3, "angular_momentum: k must be 1, 2 or 3");
  if (k == 1) return t.J1;
  if (k == 2) return t.J2;
  return t.J3;
}

LieAlgebraBasis lie_algebra_basis() {
  const double s = std::sqrt(2.0 * metric_kappa());
  LieAlgebraBasis b;
  Eigen::Matrix2cd s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, cplx(0, -1), cplx(0, 1), 0;
  s3 << 1, 0, 0, -1;
  b.E[0] = cplx(0, -0.5) * s1 / s;
  b.E[1] = cplx(0, -0.5) * s2 / s;
  b.E[2] = cplx(0, -0.5) * s3 / s;
  b.structure_constant = 1.0 / s;
  return b;
}

MatrixXcd drep(int two_j, const Eigen::Matrix2cd& X) {
  require(std::abs(X.trace()) <= 1e-12 * (1.0 + X.cwiseAbs().maxCoeff()),
          "drep: X must be traceless");
  Eigen::Matrix2cd s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, cplx(0, -1), cplx(0, 1), 0;
  s3 << 1, 0, 0, -1;
  // X = a1 X1 + a2 X2 + a3 X3 with X_k = -i sigma_k/2, a_k = i tr(sigma_k X);
  // the chart conventions give drep(X1) = -i J1, drep(X2) = i J2,
  // drep(X3) = i J3 (verified against the defining representation).
  const cplx a1 = cplx(0, 1) * (s1 * X).trace();
  const cplx a2 = cplx(0, 1) * (s2 * X).trace();
  const cplx a3 = cplx(0, 1) * (s3 * X).trace();
  const RepTables& t = rep_tables(two_j);
  return cplx(0, -1) * a1 * t.J1 + cplx(0, 1) * a2 * t.J2 +
         cplx(0, 1) * a3 * t.J3;
}

MatrixXcd entry_derivative(int two_j, const GroupPoint& g,
                           const Eigen::Matrix2cd& X) {
  return wigner_D(two_j, g) * drep(two_j, X);
}

MatrixXd conjugation_intertwiner(int two_j) {
  const int d = dim_of(two_j);
  MatrixXd eps = MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    eps(i, two_j - i) = ((two_j - i) % 2 == 0) ? 1.0 : -1.0;
  }
  return eps;
}

}  // namespace su2para
