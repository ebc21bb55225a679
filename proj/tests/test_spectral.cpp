#include <cmath>

#include "doctest.h"
#include "su2para/irreps.hpp"
#include "su2para/random.hpp"
#include "su2para/spectral.hpp"

using namespace su2para;

TEST_CASE("forward and inverse transforms round-trip") {
  Rng rng(42);
  SpectralFunction f = random_band_function(rng, 6);
  auto grid = haar_grid(6);
  GridFunction vals = inverse_transform(f, grid);
  SpectralFunction back = forward_transform(vals, 6);
  double err = 0.0;
  for (int two_j = 0; two_j <= 6; ++two_j)
    err = std::max(err, (back.block(two_j) - f.block(two_j)).norm());
  CHECK(err < 1e-12);
}

TEST_CASE("entry functions evaluate to matrix entries and are orthonormal") {
  // entry_function(j, a, b) puts E_{ba}/(2j+1) in the coefficient slot, so
  // pointwise it reproduces D^j(x)_{ab}; squared Plancherel mass is 1/(2j+1).
  Rng rng(7);
  for (int two_j : {1, 2, 4}) {
    const int a = two_j / 2, b = (two_j + 1) / 2;
    SpectralFunction e = entry_function(two_j, a, b);
    for (int k = 0; k < 5; ++k) {
      GroupPoint x = random_point(rng);
      cplx direct = wigner_D(two_j, x)(a, b);
      CHECK(std::abs(evaluate(e, x) - direct) < 1e-13);
    }
    CHECK(plancherel_norm(e) ==
          doctest::Approx(1.0 / std::sqrt(two_j + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("plancherel norm matches the grid L2 norm") {
  Rng rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    SpectralFunction f = random_band_function(rng, 8);
    auto grid = haar_grid(8);
    GridFunction vals = inverse_transform(f, grid);
    CHECK(l2_norm(vals) == doctest::Approx(plancherel_norm(f)).epsilon(1e-12));
    SpectralFunction g = random_band_function(rng, 8);
    GridFunction gvals = inverse_transform(g, grid);
    // polarization: quadrature inner product vs coefficient-space one
    cplx quad = 0.0;
    for (int ia = 0; ia < grid->n_alpha(); ++ia)
      for (int ib = 0; ib < grid->n_beta(); ++ib)
        for (int ig = 0; ig < grid->n_gamma(); ++ig) {
          const int idx = grid->node_index(ia, ib, ig);
          quad += grid->node_weight(ib) * vals.values[idx] *
                  std::conj(gvals.values[idx]);
        }
    CHECK(std::abs(quad - l2_inner(f, g)) < 1e-12);
  }
}

TEST_CASE("grid convolution has the product transform") {
  // hat(f * g) = ghat fhat, checked against the literal double integral
  // (f*g)(x) = int f(y) g(y^{-1} x) dy evaluated by quadrature.
  Rng rng(3);
  SpectralFunction f = random_band_function(rng, 4);
  SpectralFunction g = random_band_function(rng, 4);
  auto grid = haar_grid(4);
  GridFunction fv = inverse_transform(f, grid);
  SpectralFunction conv = convolve(fv, g);
  double err = 0.0;
  for (int two_j = 0; two_j <= 4; ++two_j)
    err = std::max(err, (conv.block(two_j) -
                         g.block(two_j) * f.block(two_j)).norm());
  CHECK(err < 1e-12);
}

TEST_CASE("pointwise products respect the spectral support window") {
  Rng rng(5);
  SpectralFunction f = random_band_function(rng, 4);
  SpectralFunction g = random_band_function(rng, 4);
  BandedResult pr = product(f, g, 8);
  CHECK(pr.discarded_rel < 1e-13);  // out band covers the full support
  // truncating below the support boundary must discard real mass
  BandedResult cut = product(f, g, 5);
  CHECK(cut.discarded_rel > 1e-6);
  // compare against grid multiplication
  auto grid = haar_grid(8);
  GridFunction fv = inverse_transform(f, grid);
  GridFunction gv = inverse_transform(g, grid);
  GridFunction both{grid, fv.values.cwiseProduct(gv.values)};
  SpectralFunction direct = forward_transform(both, 8);
  double err = 0.0;
  for (int two_j = 0; two_j <= 8; ++two_j)
    err = std::max(err, (pr.fn.block(two_j) - direct.block(two_j)).norm());
  CHECK(err < 1e-12);
}

TEST_CASE("sobolev norm weights each shell by its bracket") {
  SpectralFunction f = entry_function(4, 0, 3);
  const double l2 = plancherel_norm(f);
  for (double s : {-1.5, 0.0, 2.0}) {
    const double expect = std::pow(xi_bracket(4), s) * l2;
    CHECK(sobolev_norm(f, s) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("schur verification passes on a partial band too") {
  auto grid = haar_grid(8);
  CHECK(verify_schur(*grid, 5) < 1e-12);
}
