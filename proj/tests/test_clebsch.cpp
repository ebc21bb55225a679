#include <cmath>

#include "doctest.h"
#include "su2para/clebsch.hpp"
#include "su2para/irreps.hpp"
#include "su2para/random.hpp"

using namespace su2para;

TEST_CASE("coupling coefficients reproduce the standard table") {
  const double eps = 1e-14;
  // two spin one-halves
  CHECK(clebsch_gordan(1, 1, 1, 1, 2, 2) == doctest::Approx(1.0).epsilon(eps));
  CHECK(clebsch_gordan(1, 1, 1, -1, 2, 0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(eps));
  CHECK(clebsch_gordan(1, 1, 1, -1, 0, 0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(eps));
  CHECK(clebsch_gordan(1, -1, 1, 1, 0, 0) ==
        doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(eps));
  // two spin ones
  CHECK(clebsch_gordan(2, 0, 2, 0, 4, 0) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(eps));
  CHECK(clebsch_gordan(2, 0, 2, 0, 2, 0) == doctest::Approx(0.0).epsilon(eps));
  CHECK(clebsch_gordan(2, 0, 2, 0, 0, 0) ==
        doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(eps));
  CHECK(clebsch_gordan(2, 2, 2, -2, 0, 0) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(eps));
  CHECK(clebsch_gordan(2, 2, 2, 0, 4, 2) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(eps));
  CHECK(clebsch_gordan(2, 2, 2, 0, 2, 2) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(eps));
  // spin one with spin one-half
  CHECK(clebsch_gordan(2, 2, 1, 1, 3, 3) == doctest::Approx(1.0).epsilon(eps));
  CHECK(clebsch_gordan(2, 2, 1, -1, 3, 1) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(eps));
  CHECK(clebsch_gordan(2, 0, 1, 1, 3, 1) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(eps));
  CHECK(clebsch_gordan(2, 2, 1, -1, 1, 1) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(eps));
  CHECK(clebsch_gordan(2, 0, 1, 1, 1, 1) ==
        doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(eps));
  // parity-zero cases
  CHECK(clebsch_gordan(4, 0, 2, 0, 6, 0) ==
        doctest::Approx(std::sqrt(3.0 / 5.0)).epsilon(eps));
  // violations return zero
  CHECK(clebsch_gordan(2, 2, 2, 2, 2, 2) == 0.0);   // m1 + m2 != m3
  CHECK(clebsch_gordan(2, 0, 2, 0, 8, 0) == 0.0);   // triangle
  CHECK(clebsch_gordan(1, 1, 2, 0, 2, 1) == 0.0);   // parity of 2j sums
}

TEST_CASE("coupling matrix intertwines the product representation") {
  Rng rng(31);
  const GroupPoint g = random_point(rng);
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const MatrixXcd da = wigner_D(a, g);
    const MatrixXcd db = wigner_D(b, g);
    MatrixXcd kron = MatrixXcd::Zero(da.rows() * db.rows(), da.cols() * db.cols());
    for (int i = 0; i < da.rows(); ++i)
      for (int j = 0; j < da.cols(); ++j)
        kron.block(i * db.rows(), j * db.cols(), db.rows(), db.cols()) =
            da(i, j) * db;
    for (int c : product_support(a, b)) {
      const MatrixXd& u = cg_matrix(a, b, c);
      CHECK((kron * u - u * wigner_D(c, g)).norm() < 1e-12);
    }
  }
}

TEST_CASE("full intertwiner is unitary") {
  for (auto [a, b] : {std::pair{1, 1}, {2, 2}, {3, 1}}) {
    const MatrixXd u = cg_full_intertwiner(a, b);
    CHECK((u.transpose() * u -
           MatrixXd::Identity(u.cols(), u.cols())).norm() < 1e-12);
    CHECK((u * u.transpose() -
           MatrixXd::Identity(u.rows(), u.rows())).norm() < 1e-12);
  }
}

TEST_CASE("product support is the triangle range") {
  CHECK(product_support(1, 1) == std::vector<int>{0, 2});
  CHECK(product_support(3, 2) == std::vector<int>{1, 3, 5});
  CHECK(product_support(4, 0) == std::vector<int>{4});
}

TEST_CASE("pointwise products stay inside the predicted degree window") {
  for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {4, 4}}) {
    const SpectralFunction f = entry_function(a, 0, a > 0 ? 1 : 0);
    const SpectralFunction g = entry_function(b, b / 2, 0);
    const LocalizationReport rep = verify_spec_prd(f, g);
    CHECK(rep.outside_mass < 1e-12);
    CHECK(rep.predicted.front() == std::abs(a - b));
    CHECK(rep.predicted.back() == a + b);
  }
}

TEST_CASE("weyl count matches the direct sum at frozen thresholds") {
  // oracle: sum d_j^2 over j(j+1)/(2 kappa) <= t^2, counted by hand for
  // kappa = 1: |xi_j| = sqrt(j(j+1)/2).
  // t = 1.1: two_j = 0,1,2 pass (|xi| = 0, 0.612, 1.0) -> 1 + 4 + 9 = 14.
  CHECK(weyl_count(1.1) == 14);
  // t = 2: adds two_j = 3 (1.369), 4 (1.732) -> + 16 + 25 = 55.
  CHECK(weyl_count(2.0) == 55);
  // t = 3: adds two_j = 5 (2.09), 6 (2.45), 7 (2.81) -> + 36 + 49 + 64 = 204.
  CHECK(weyl_count(3.0) == 204);
  CHECK(weyl_ratio(3.0) == doctest::Approx(204.0 / 27.0).epsilon(1e-13));
}

TEST_CASE("weyl ratio stays inside the frozen bracket") {
  // measured range over t in [5, 20]: [7.014, 8.264]; asymptote ~ 7.54
  for (double t = 5.0; t <= 20.0; t += 0.5) {
    const double q = weyl_ratio(t);
    CHECK(q > 6.8);
    CHECK(q < 8.5);
  }
}
