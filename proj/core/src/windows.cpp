#include "su2para/windows.hpp"

#include <cmath>

#include "su2para/irreps.hpp"

namespace su2para {

namespace {

// g(x) = exp(-1/x) for x > 0, extended by 0; the classic C^inf bump brick.
double bump(double x) { return x > 0 ? std::exp(-1.0 / x) : 0.0; }
double bump_prime(double x) {
  return x > 0 ? std::exp(-1.0 / x) / (x * x) : 0.0;
}

// Smoothstep s with s = 0 for x <= 0, s = 1 for x >= 1.
double smoothstep(double x) {
  const double a = bump(x), b = bump(1.0 - x);
  return a / (a + b);
}
double smoothstep_prime(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = bump(x), b = bump(1.0 - x);
  const double ap = bump_prime(x), bp = -bump_prime(1.0 - x);
  const double denom = (a + b) * (a + b);
  return (ap * (a + b) - a * (ap + bp)) / denom;
}

}  // namespace

double phi_window(double x) {
  const double y = std::abs(x);
  if (y <= 0.5) return 1.0;
  if (y >= 1.0) return 0.0;
  return smoothstep(2.0 - 2.0 * y);
}

double psi_window(double x) {
  const double y = std::abs(x);
  if (y <= 0.5 || y >= 1.0) return 0.0;
  // phi'(y) = -2 s'(2 - 2y); psi = -y phi'(y).
  return 2.0 * y * smoothstep_prime(2.0 - 2.0 * y);
}

double theta_window(double x) { return phi_window(0.5 * x) - phi_window(x); }

LogLattice log_lattice(double t_lo, double t_hi, int panels_per_octave,
                       int points_per_panel) {
  require(t_lo > 0 && t_hi > t_lo, "log_lattice: need 0 < t_lo < t_hi");
  require(panels_per_octave >= 1 && points_per_panel >= 2,
          "log_lattice: bad resolution");
  const double octaves = std::log2(t_hi / t_lo);
  const int panels = std::max(1, int(std::ceil(octaves * panels_per_octave)));
  std::vector<double> gx, gw;
  gauss_legendre(points_per_panel, gx, gw);

  LogLattice lat;
  lat.t.reserve(size_t(panels) * points_per_panel);
  lat.w.reserve(size_t(panels) * points_per_panel);
  const double lo = std::log(t_lo), hi = std::log(t_hi);
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h, b = a + h;
    for (int i = 0; i < points_per_panel; ++i) {
      // map [-1,1] -> [a,b] in log t; dt/t = d(log t)
      const double lt = 0.5 * (a + b) + 0.5 * (b - a) * gx[i];
      lat.t.push_back(std::exp(lt));
      lat.w.push_back(0.5 * (b - a) * gw[i]);
    }
  }
  return lat;
}

SpectralFunction multiplier_apply(const SpectralFunction& f,
                                  const std::function<double(double)>& h) {
  SpectralFunction out = f;
  for (int two_j = 0; two_j <= f.two_band; ++two_j)
    out.block(two_j) *= h(xi_norm(two_j));
  return out;
}

SpectralFunction lp_lowpass(const SpectralFunction& f, double t) {
  return multiplier_apply(f, [t](double r) { return phi_window(r / t); });
}

SpectralFunction lp_band(const SpectralFunction& f, double t) {
  return multiplier_apply(f, [t](double r) { return psi_window(r / t); });
}

SpectralFunction lp_dyadic(const SpectralFunction& f, int k) {
  const double scale = std::ldexp(1.0, k);
  return multiplier_apply(f,
                          [scale](double r) { return theta_window(r / scale); });
}

double lowpass_saturation_t(int two_band) {
  return 2.0 * xi_norm(two_band);
}

double lp_reconstruction_residual(const SpectralFunction& f,
                                  const LogLattice& lat) {
  SpectralFunction acc = lp_lowpass(f, 1.0);
  for (size_t k = 0; k < lat.t.size(); ++k)
    acc = add(acc, scaled(lat.w[k], lp_band(f, lat.t[k])));
  const double denom = plancherel_norm(f);
  if (denom == 0) return 0.0;
  return plancherel_norm(add(f, scaled(-1.0, acc))) / denom;
}

double lp_square_norm(const SpectralFunction& f, double s,
                      const LogLattice& lat) {
  double acc = std::pow(plancherel_norm(lp_lowpass(f, 1.0)), 2);
  for (size_t k = 0; k < lat.t.size(); ++k) {
    const double n = plancherel_norm(lp_band(f, lat.t[k]));
    acc += lat.w[k] * std::pow(lat.t[k], 2.0 * s) * n * n;
  }
  return std::sqrt(acc);
}

double grid_sup(const SpectralFunction& f) {
  auto grid = haar_grid(f.two_band);
  GridFunction g = inverse_transform(f, grid);
  return g.values.cwiseAbs().maxCoeff();
}

double zygmund_norm(const SpectralFunction& f, double r,
                    const LogLattice& lat) {
  double norm = grid_sup(lp_lowpass(f, 1.0));
  for (double t : lat.t)
    norm = std::max(norm, std::pow(t, r) * grid_sup(lp_band(f, t)));
  return norm;
}

double bernstein_check(const SpectralFunction& f, double s) {
  const double denom = plancherel_norm(f);
  if (denom == 0) return 0.0;
  double top = 0.0;
  for (int two_j = 0; two_j <= f.two_band; ++two_j)
    if (f.block(two_j).size() > 0 && f.block(two_j).norm() > 0)
      top = std::max(top, xi_norm(two_j));
  if (top == 0.0) top = 1.0;  // mass only at the trivial degree
  return sobolev_norm(f, s) / (std::pow(top, s) * denom);
}

KernelProfile kernel_profile(const std::function<double(double)>& h, double t,
                             int two_band, int grid_two_band, double r) {
  auto grid = haar_grid(grid_two_band);
  const GroupPoint e = identity_point();
  KernelProfile prof;
  const int n = grid->node_count();
  for (int idx = 0; idx < n; ++idx) {
    const GroupPoint x = grid->node_point(idx);
    // Character sum: k_t(x) = sum_j d_j h(|xi_j|/t) chi_j(x), with
    // chi_j(x) = sin((j + 1/2) omega) / sin(omega/2), omega = 2 * angle.
    const double half = rotation_angle(x);
    double val = 0.0;
    for (int two_j = 0; two_j <= two_band; ++two_j) {
      const double hj = h(xi_norm(two_j) / t);
      if (hj == 0.0) continue;
      const int d = dim_of(two_j);
      double chi;
      if (std::abs(std::sin(half)) < 1e-9) {
        const double c = std::cos(half);
        chi = (c >= 0 || two_j % 2 == 0) ? double(d) : -double(d);
      } else {
        chi = std::sin(d * half) / std::sin(half);
      }
      val += d * hj * chi;
    }
    const double w = grid->node_weight_flat(idx) * std::abs(val);
    prof.l1 += w;
    prof.dist_l1 += w * std::pow(distance(e, x), r);
  }
  return prof;
}

}  // namespace su2para
