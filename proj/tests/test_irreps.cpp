#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "su2para/irreps.hpp"
#include "su2para/random.hpp"

using namespace su2para;

namespace {
struct KappaGuard {
  double saved = metric_kappa();
  ~KappaGuard() { set_metric_kappa(saved); }
};
}  // namespace

TEST_CASE("spin one-half representation is the defining one") {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const GroupPoint g = random_point(rng);
    CHECK((wigner_D(1, g) - g.matrix()).norm() < 1e-13);
  }
}

TEST_CASE("little-d matrices are real orthogonal with frozen entries") {
  const double beta = 0.9;
  for (int two_j : {1, 2, 3, 4, 7}) {
    const MatrixXd d = wigner_d(two_j, beta);
    CHECK((d * d.transpose() - MatrixXd::Identity(d.rows(), d.cols())).norm() <
          1e-13);
  }
  // d^{1}_{00}(beta) = cos(beta): middle entry of the spin-1 block in the
  // ascending-m layout.
  CHECK(wigner_d(2, beta)(1, 1) == doctest::Approx(std::cos(beta)).epsilon(1e-13));
  // d^{1/2}(beta) rotates by half the angle.
  const MatrixXd dh = wigner_d(1, beta);
  CHECK(std::abs(std::abs(dh(0, 0)) - std::cos(beta / 2)) < 1e-13);
  CHECK(std::abs(std::abs(dh(0, 1)) - std::sin(beta / 2)) < 1e-13);
}

TEST_CASE("representations are homomorphisms and unitary") {
  Rng rng(22);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const GroupPoint g = random_point(rng);
    const GroupPoint h = random_point(rng);
    for (int two_j : {0, 1, 2, 3, 5, 8}) {
      const MatrixXcd dg = wigner_D(two_j, g);
      const MatrixXcd dh = wigner_D(two_j, h);
      const MatrixXcd dgh = wigner_D(two_j, multiply(g, h));
      worst = std::max(worst, (dg * dh - dgh).norm());
      worst = std::max(
          worst, (dg * dg.adjoint() -
                  MatrixXcd::Identity(dg.rows(), dg.cols())).norm());
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("drep is the derivative of the representation") {
  const auto basis = lie_algebra_basis();
  for (int two_j : {1, 2, 4}) {
    for (int k = 0; k < 3; ++k) {
      // exp(t drep(j, E_k)) == D^j(exp(t E_k))
      const double t = 0.37;
      const Eigen::Matrix2cd ex = (t * basis.E[k]).exp();
      const MatrixXcd lhs = (t * drep(two_j, basis.E[k])).exp();
      const MatrixXcd rhs = wigner_D(two_j, GroupPoint(ex));
      CHECK((lhs - rhs).norm() < 1e-12);
    }
  }
  // drep at spin one-half is the identity map on the algebra
  CHECK((drep(1, basis.E[1]) - basis.E[1]).norm() < 1e-14);
}

TEST_CASE("orthonormal frame has the stated commutators") {
  const auto basis = lie_algebra_basis();
  const double f = basis.structure_constant;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const Eigen::Matrix2cd comm =
        basis.E[i] * basis.E[j] - basis.E[j] * basis.E[i];
    CHECK((comm - f * basis.E[k]).norm() < 1e-14);
  }
  // f = 1 / sqrt(2 kappa) for E_k = -i sigma_k / (2 sqrt(2 kappa))
  CHECK(f == doctest::Approx(1.0 / std::sqrt(2.0 * metric_kappa())).epsilon(1e-13));
}

TEST_CASE("casimir sum is the closed-form scalar at any configured kappa") {
  KappaGuard guard;
  for (double kappa : {1.0, 0.5, 2.25}) {
    set_metric_kappa(kappa);
    const auto basis = lie_algebra_basis();
    for (int two_j = 0; two_j <= 12; ++two_j) {
      MatrixXcd sum = MatrixXcd::Zero(dim_of(two_j), dim_of(two_j));
      for (int k = 0; k < 3; ++k) {
        const MatrixXcd d = drep(two_j, basis.E[k]);
        sum += d * d;
      }
      const double j = 0.5 * two_j;
      const double lambda = j * (j + 1.0) / (2.0 * kappa);
      CHECK(casimir_eigenvalue(two_j) == doctest::Approx(lambda).epsilon(1e-14));
      CHECK((sum + lambda * MatrixXcd::Identity(dim_of(two_j), dim_of(two_j)))
                .norm() < 1e-12);
    }
  }
}

TEST_CASE("entry derivative matches a central finite difference") {
  Rng rng(23);
  const auto basis = lie_algebra_basis();
  const GroupPoint g = random_point(rng);
  const int two_j = 3;
  const double h = 1e-5;
  for (int k = 0; k < 3; ++k) {
    const Eigen::Matrix2cd step = (h * basis.E[k]).exp();
    const MatrixXcd fwd = wigner_D(two_j, multiply(g, GroupPoint(step)));
    const MatrixXcd bwd =
        wigner_D(two_j, multiply(g, GroupPoint(Eigen::Matrix2cd(step.adjoint()))));
    const MatrixXcd fd = (fwd - bwd) / (2.0 * h);
    CHECK((fd - entry_derivative(two_j, g, basis.E[k])).norm() < 1e-8);
  }
}

TEST_CASE("conjugation intertwiner flips the representation to its conjugate") {
  Rng rng(24);
  for (int two_j : {1, 2, 3, 6}) {
    const MatrixXd eps = conjugation_intertwiner(two_j);
    const GroupPoint g = random_point(rng);
    const MatrixXcd d = wigner_D(two_j, g);
    CHECK((d.conjugate() - eps * d * eps.inverse()).norm() < 1e-12);
  }
}

TEST_CASE("angular momentum matrices satisfy su(2) relations") {
  for (int two_j : {1, 2, 5}) {
    const MatrixXcd j1 = angular_momentum(two_j, 1);
    const MatrixXcd j2 = angular_momentum(two_j, 2);
    const MatrixXcd j3 = angular_momentum(two_j, 3);
    CHECK((j1 * j2 - j2 * j1 - cplx(0, 1) * j3).norm() < 1e-13);
    // J3 diagonal ascending
    for (int i = 0; i < dim_of(two_j); ++i)
      CHECK(std::abs(j3(i, i) - m_of_index(two_j, i)) < 1e-14);
  }
}
