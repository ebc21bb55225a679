#include "su2para/random.hpp"

#include <cmath>

#include "su2para/windows.hpp"

namespace su2para {

GroupPoint random_point(Rng& rng) {
  // uniform in the Euler chart is fine for test sampling (not Haar-exact
  // in beta, but covers the group and the double cover in gamma)
  const double alpha = rng.uniform(0.0, 2.0 * M_PI);
  const double beta = std::acos(rng.uniform(-1.0, 1.0));
  const double gamma = rng.uniform(0.0, 4.0 * M_PI);
  return from_euler({alpha, beta, gamma});
}

SpectralFunction random_band_function(Rng& rng, int two_band) {
  SpectralFunction f = SpectralFunction::zero(two_band);
  for (int two_j = 0; two_j <= two_band; ++two_j) {
    const int d = dim_of(two_j);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) f.block(two_j)(r, c) = rng.cnormal();
  }
  return f;
}

SpectralFunction random_zygmund_witness(Rng& rng, int two_band, double r) {
  SpectralFunction raw = random_band_function(rng, two_band);
  SpectralFunction out = SpectralFunction::zero(two_band);
  const double top = xi_norm(two_band);
  for (int k = 0;; ++k) {
    const double t = std::ldexp(1.0, k);
    SpectralFunction block =
        k == 0 ? lp_lowpass(raw, 2.0) : lp_dyadic(raw, k);
    if (k > 0 && t / 2.0 > top) break;
    const double sup = grid_sup(block);
    if (sup > 0)
      out = add(out, scaled(std::pow(t, -r) / sup, block));
  }
  return out;
}

}  // namespace su2para
