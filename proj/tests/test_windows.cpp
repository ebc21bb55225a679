#include <cmath>

#include "doctest.h"
#include "su2para/random.hpp"
#include "su2para/windows.hpp"

using namespace su2para;

TEST_CASE("window profiles have the stated plateaus and supports") {
  CHECK(phi_window(0.0) == 1.0);
  CHECK(phi_window(0.5) == 1.0);
  CHECK(phi_window(1.0) == 0.0);
  CHECK(phi_window(1.7) == 0.0);
  CHECK(phi_window(0.7) > 0.0);
  CHECK(phi_window(0.7) < 1.0);
  // monotone on the glue
  double prev = 1.0;
  for (double x = 0.5; x <= 1.0; x += 0.01) {
    const double v = phi_window(x);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  // psi = -x phi' vanishes off [1/2, 1]; theta = phi(x/2) - phi(x)
  CHECK(psi_window(0.4) == 0.0);
  CHECK(psi_window(1.1) == 0.0);
  CHECK(psi_window(0.75) > 0.0);
  CHECK(theta_window(0.4) == 0.0);
  CHECK(theta_window(2.1) == 0.0);
  CHECK(theta_window(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (double x : {0.6, 0.9, 1.3, 1.9})
    CHECK(theta_window(x) ==
          doctest::Approx(phi_window(x / 2) - phi_window(x)).epsilon(1e-14));
}

TEST_CASE("psi integrates to the phi telescope on the log lattice") {
  // int psi(lambda/t) dt/t over t in (lambda, 2 lambda) equals
  // phi(lambda/T_hi) - phi(lambda/T_lo) = 1 - phi(lambda) for T_lo = 1.
  const LogLattice lat = log_lattice(1.0, 64.0, 8);
  for (double lambda : {1.3, 2.0, 5.7, 20.0}) {
    double acc = 0.0;
    for (size_t i = 0; i < lat.t.size(); ++i)
      acc += lat.w[i] * psi_window(lambda / lat.t[i]);
    CHECK(acc == doctest::Approx(1.0 - phi_window(lambda)).epsilon(1e-10));
  }
}

TEST_CASE("log lattice integrates dt/t exactly enough") {
  const LogLattice lat = log_lattice(2.0, 16.0, 6);
  double mass = 0.0, mom = 0.0;
  for (size_t i = 0; i < lat.t.size(); ++i) {
    mass += lat.w[i];
    mom += lat.w[i] * lat.t[i];
  }
  CHECK(mass == doctest::Approx(std::log(8.0)).epsilon(1e-12));
  CHECK(mom == doctest::Approx(14.0).epsilon(1e-10));  // int_2^16 dt
}

TEST_CASE("dyadic blocks live exactly on their annuli and telescope back") {
  Rng rng(41);
  const SpectralFunction f = random_band_function(rng, 12);
  // support audit: theta(|xi|/2^k) block vanishes outside [2^{k-1}, 2^{k+1}]
  for (int k = 0; k <= 3; ++k) {
    const SpectralFunction blk = lp_dyadic(f, k);
    const double t = std::pow(2.0, k);
    for (int two_j = 0; two_j <= blk.two_band; ++two_j) {
      const double lam = xi_norm(two_j);
      if (lam < t / 2 || lam > 2 * t) CHECK(blk.block(two_j).norm() == 0.0);
    }
  }
  // exact telescoping: lowpass at 1 plus dyadic blocks recovers f
  SpectralFunction acc = lp_lowpass(f, 1.0);
  for (int k = 0; k <= 5; ++k) acc = add(acc, lp_dyadic(f, k));
  double err = 0.0;
  for (int two_j = 0; two_j <= 12; ++two_j)
    err = std::max(err, (acc.block(two_j) - f.block(two_j)).norm());
  CHECK(err < 1e-12);
}

TEST_CASE("lattice reconstruction of the continuous decomposition is faithful") {
  Rng rng(42);
  const SpectralFunction f = random_band_function(rng, 16);
  const LogLattice lat = log_lattice(1.0, 2.0 * lowpass_saturation_t(16), 8);
  CHECK(lp_reconstruction_residual(f, lat) < 1e-6);
}

TEST_CASE("square-function sobolev estimator sits in frozen brackets") {
  // ratio lp_square_norm / sobolev_norm measured over 20 seeded band-16
  // functions; brackets carry a small margin.
  Rng rng(43);
  const LogLattice lat = log_lattice(1.0, 2.0 * lowpass_saturation_t(16), 8);
  const struct {
    double s, lo, hi;
  } rows[] = {{-2.0, 1.05, 1.26}, {-1.0, 1.18, 1.31}, {0.0, 1.49, 1.65},
              {1.0, 1.96, 2.16},  {2.0, 2.63, 2.90}};
  for (int i = 0; i < 20; ++i) {
    const SpectralFunction f = random_band_function(rng, 16);
    for (const auto& row : rows) {
      const double q = lp_square_norm(f, row.s, lat) / sobolev_norm(f, row.s);
      CHECK(q > row.lo);
      CHECK(q < row.hi);
    }
  }
}

TEST_CASE("zygmund witnesses carry the prescribed block profile") {
  for (uint64_t seed : {1, 2, 3, 4}) {
    Rng local(seed);
    const SpectralFunction w = random_zygmund_witness(local, 8, 1.0);
    for (int k = 0; k <= 1; ++k) {
      const SpectralFunction blk = lp_dyadic(w, k);
      if (plancherel_norm(blk) == 0.0) continue;
      const double sup = grid_sup(blk);
      // heights 2^{-k} up to window-overlap mixing; frozen bracket
      CHECK(sup * std::pow(2.0, k) > 0.6);
      CHECK(sup * std::pow(2.0, k) < 1.7);
    }
  }
}

TEST_CASE("zygmund norm of a witness is moderate and scale-invariant-ish") {
  Rng rng(45);
  const SpectralFunction w = random_zygmund_witness(rng, 8, 0.7);
  const LogLattice lat = log_lattice(1.0, 2.0 * lowpass_saturation_t(8), 8);
  const double z = zygmund_norm(w, 0.7, lat);
  CHECK(z > 0.1);
  CHECK(z < 30.0);
}

TEST_CASE("bernstein quotient is controlled on single shells") {
  for (int two_j : {2, 6, 12}) {
    const SpectralFunction f = entry_function(two_j, 0, two_j / 2);
    for (double s : {0.5, 1.0, 2.0}) {
      const double q = bernstein_check(f, s);
      const double cap = std::pow(xi_bracket(two_j) / xi_norm(two_j), s);
      CHECK(q <= cap * (1.0 + 1e-12));
      CHECK(q >= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("multiplier kernels concentrate as the scale grows") {
  // frozen from the quadrature oracle: l1 stays far under the generic bound,
  // and the first distance moment decreases with t.
  const KernelProfile p2 = kernel_profile(phi_window, 2.0, 40, 48, 1.0);
  const KernelProfile p4 = kernel_profile(phi_window, 4.0, 40, 48, 1.0);
  const KernelProfile p8 = kernel_profile(phi_window, 8.0, 40, 48, 1.0);
  CHECK(p2.l1 < 6.0);
  CHECK(p4.l1 < 6.0);
  CHECK(p8.l1 < 6.0);
  CHECK(p2.l1 > 1.0);
  CHECK(p4.dist_l1 < p2.dist_l1);
  CHECK(p8.dist_l1 < p4.dist_l1);
}

TEST_CASE("multiplier apply equals blockwise scaling") {
  Rng rng(46);
  const SpectralFunction f = random_band_function(rng, 8);
  const auto h = [](double lam) { return 1.0 / (1.0 + lam * lam); };
  const SpectralFunction g = multiplier_apply(f, h);
  for (int two_j = 0; two_j <= 8; ++two_j)
    CHECK((g.block(two_j) - h(xi_norm(two_j)) * f.block(two_j)).norm() < 1e-14);
}
