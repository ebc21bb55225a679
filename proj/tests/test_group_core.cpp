#include <cmath>

#include "doctest.h"
#include "su2para/group.hpp"
#include "su2para/quadrature.hpp"
#include "su2para/random.hpp"
#include "su2para/spectral.hpp"

using namespace su2para;

namespace {
double mat_dist(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return (a - b).norm();
}
}  // namespace

TEST_CASE("group points are special unitary") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const GroupPoint g = random_point(rng);
    const Eigen::Matrix2cd m = g.matrix();
    CHECK(mat_dist(m * m.adjoint(), Eigen::Matrix2cd::Identity()) < 1e-14);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-14);
    CHECK(std::abs(m(1, 1) - std::conj(m(0, 0))) < 1e-14);
    CHECK(std::abs(m(1, 0) + std::conj(m(0, 1))) < 1e-14);
  }
}

TEST_CASE("multiply and inverse satisfy the group laws") {
  Rng rng(12);
  const GroupPoint e = identity_point();
  for (int i = 0; i < 25; ++i) {
    const GroupPoint g = random_point(rng);
    const GroupPoint h = random_point(rng);
    const GroupPoint k = random_point(rng);
    CHECK(mat_dist(multiply(multiply(g, h), k).matrix(),
                   multiply(g, multiply(h, k)).matrix()) < 1e-14);
    CHECK(mat_dist(multiply(g, inverse(g)).matrix(), e.matrix()) < 1e-14);
    CHECK(mat_dist(multiply(g, e).matrix(), g.matrix()) < 1e-15);
  }
}

TEST_CASE("euler chart round-trips through the double cover") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const GroupPoint g = random_point(rng);
    const EulerAngles e = to_euler(g);
    CHECK(e.alpha >= 0.0);
    CHECK(e.alpha < 2.0 * M_PI + 1e-12);
    CHECK(e.beta >= -1e-12);
    CHECK(e.beta <= M_PI + 1e-12);
    CHECK(e.gamma >= 0.0);
    CHECK(e.gamma < 4.0 * M_PI + 1e-12);
    CHECK(mat_dist(from_euler(e).matrix(), g.matrix()) < 1e-12);
  }
  // antipode: gamma + 2pi flips the sign of the matrix
  const EulerAngles e{1.0, 0.7, 2.0};
  const EulerAngles anti{1.0, 0.7, 2.0 + 2.0 * M_PI};
  CHECK(mat_dist(from_euler(anti).matrix(), -from_euler(e).matrix()) < 1e-14);
}

TEST_CASE("rotation angle matches the trace formula") {
  Rng rng(14);
  CHECK(rotation_angle(identity_point()) == doctest::Approx(0.0).epsilon(1e-12));
  for (int i = 0; i < 50; ++i) {
    const GroupPoint g = random_point(rng);
    const double th = rotation_angle(g);
    CHECK(th >= 0.0);
    CHECK(th <= M_PI + 1e-12);
    // tr(g) = 2 cos(theta)
    CHECK(std::abs(g.matrix().trace().real() - 2.0 * std::cos(th)) < 1e-12);
    CHECK(std::abs(g.matrix().trace().imag()) < 1e-12);
  }
}

TEST_CASE("distance is bi-invariant and matches the exponential scale") {
  Rng rng(15);
  for (int i = 0; i < 25; ++i) {
    const GroupPoint g = random_point(rng);
    const GroupPoint h = random_point(rng);
    const GroupPoint k = random_point(rng);
    const double d = distance(g, h);
    CHECK(d >= 0.0);
    CHECK(distance(multiply(k, g), multiply(k, h)) ==
          doctest::Approx(d).epsilon(1e-10));
    CHECK(distance(multiply(g, k), multiply(h, k)) ==
          doctest::Approx(d).epsilon(1e-10));
    CHECK(distance(h, g) == doctest::Approx(d).epsilon(1e-12));
  }
  // dist(e, exp(t E_3)) = |t| for the orthonormal frame: exp(t E_3) has
  // rotation angle |t| / (2 sqrt(2 kappa)).
  const double t = 0.3;
  const double s = 2.0 * std::sqrt(2.0 * metric_kappa());
  Eigen::Matrix2cd ex;
  const double half = t / s;
  ex << cplx(std::cos(half), -std::sin(half)), 0.0, 0.0,
      cplx(std::cos(half), std::sin(half));
  CHECK(distance(identity_point(), GroupPoint(ex)) ==
        doctest::Approx(t).epsilon(1e-12));
}

TEST_CASE("quadrature weights are a probability measure") {
  const QuadratureGrid grid(6);
  double total = 0.0;
  for (int ib = 0; ib < grid.n_beta(); ++ib)
    total += grid.node_weight(ib) * grid.n_alpha() * grid.n_gamma();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(grid.node_count() ==
        static_cast<long>(grid.n_alpha()) * grid.n_beta() * grid.n_gamma());
  // flat-index accessors agree with the 3-index ones
  const long idx = grid.node_index(3, 2, 5);
  CHECK(mat_dist(grid.node_point(idx).matrix(),
                 grid.node_point(3, 2, 5).matrix()) == 0.0);
  CHECK(grid.node_weight_flat(idx) == grid.node_weight(2));
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  double s0 = 0.0, s2 = 0.0, s14 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    s0 += w[i];
    s2 += w[i] * x[i] * x[i];
    s14 += w[i] * std::pow(x[i], 14);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(s14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("haar grid passes the exhaustive orthogonality audit at a small band") {
  CHECK(verify_schur(*haar_grid(6)) < 1e-12);
}
