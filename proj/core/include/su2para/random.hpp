#pragma once

#include <cstdint>
#include <random>

#include "su2para/group.hpp"
#include "su2para/spectral.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Seeded generator shared by all stochastic constructions; every consumer
// takes it by reference so runs are reproducible end to end.
struct Rng {
  explicit Rng(uint64_t seed) : eng(seed) {}
  std::mt19937_64 eng;
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng); }
  cplx cnormal() { return cplx(normal(), normal()) / std::sqrt(2.0); }
};

// Haar-ish random group point (uniform Euler chart sampling).
GroupPoint random_point(Rng& rng);

// Independent complex Gaussian Fourier coefficients up to the band.
SpectralFunction random_band_function(Rng& rng, int two_band);

// Random function with prescribed Littlewood-Paley block sizes: dyadic
// blocks at t = 2^k scaled to sup height 2^{-r k} (a C^r_* witness).  The
// k = 0 block also carries the low-frequency part.
SpectralFunction random_zygmund_witness(Rng& rng, int two_band, double r);

}  // namespace su2para
