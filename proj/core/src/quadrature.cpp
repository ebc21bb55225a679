#include "su2para/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "su2para/irreps.hpp"

namespace su2para {

namespace {
constexpr double kPi = 3.14159265358979323846;

// One Schur integral by direct summation, for the constructor self-test.
cplx schur_sum(const QuadratureGrid& g, int two_j1, int i1m, int i1n,
               int two_j2, int i2m, int i2n) {
  const double m1 = m_of_index(two_j1, i1m), n1 = m_of_index(two_j1, i1n);
  const double m2 = m_of_index(two_j2, i2m), n2 = m_of_index(two_j2, i2n);
  std::vector<cplx> fa(g.n_alpha()), fg(g.n_gamma());
  for (int ia = 0; ia < g.n_alpha(); ++ia)
    fa[ia] = std::polar(1.0, -(m1 - m2) * g.alpha(ia));
  for (int ig = 0; ig < g.n_gamma(); ++ig)
    fg[ig] = std::polar(1.0, -(n1 - n2) * g.gamma(ig));
  cplx asum = 0, gsum = 0;
  for (auto v : fa) asum += v;
  for (auto v : fg) gsum += v;
  cplx bsum = 0;
  for (int ib = 0; ib < g.n_beta(); ++ib) {
    const MatrixXd d1 = wigner_d(two_j1, g.beta(ib));
    const MatrixXd d2 = wigner_d(two_j2, g.beta(ib));
    bsum += g.beta_weight(ib) * d1(i1m, i1n) * d2(i2m, i2n);
  }
  return asum * bsum * gsum / (double(g.n_alpha()) * double(g.n_gamma()));
}
}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (n == 1) { p1 = x; }
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

QuadratureGrid::QuadratureGrid(int two_band) : two_band_(two_band) {
  require(two_band >= 0, "QuadratureGrid: bandlimit must be nonnegative");
  const int na = 2 * two_band + 2;
  const int ng = 4 * two_band + 2;
  const int nb = two_band + 2;
  alpha_.resize(na);
  for (int i = 0; i < na; ++i) alpha_[i] = 2.0 * kPi * i / na;
  gamma_.resize(ng);
  for (int i = 0; i < ng; ++i) gamma_[i] = 4.0 * kPi * i / ng;
  std::vector<double> x, w;
  gauss_legendre(nb, x, w);
  beta_.resize(nb);
  beta_w_.resize(nb);
  for (int i = 0; i < nb; ++i) {
    beta_[i] = std::acos(x[i]);
    beta_w_[i] = 0.5 * w[i];
  }
}

std::shared_ptr<const QuadratureGrid> haar_grid(int two_band) {
  // Grids are immutable; cache them per bandlimit so repeated transform-heavy
  // code paths (operator probes, paraproducts) skip rebuild + self-test.
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const QuadratureGrid>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(two_band);
    if (it != cache.end()) return it->second;
  }
  auto grid = std::make_shared<const QuadratureGrid>(two_band);
  double wsum = 0.0;
  for (int ib = 0; ib < grid->n_beta(); ++ib)
    wsum += grid->beta_weight(ib);
  double residual = std::abs(wsum - 1.0);

  const int B = two_band;
  struct Pair { int j1, m1, n1, j2, m2, n2; double expect; };
  std::vector<Pair> samples;
  auto push = [&](int j1, int i1m, int i1n, int j2, int i2m, int i2n) {
    double expect = 0.0;
    if (j1 == j2 && i1m == i2m && i1n == i2n) expect = 1.0 / dim_of(j1);
    samples.push_back({j1, i1m, i1n, j2, i2m, i2n, expect});
  };
  push(B, 0, 0, B, 0, 0);
  push(B, B, 0, B, B, 0);
  push(B, B / 2, B, B, B / 2, B);
  if (B >= 1) {
    push(B, 0, 0, B, B, B);
    push(B, 0, 0, B - 1, 0, 0);
    push(B, B / 2, B / 2, 0, 0, 0);
    push(1, 0, 1, 0, 0, 0);
    push(B, 0, 1, B, 1, 0);
  }
  for (const auto& s : samples) {
    const cplx got =
        schur_sum(*grid, s.j1, s.m1, s.n1, s.j2, s.m2, s.n2);
    residual = std::max(residual, std::abs(got - s.expect));
  }
  require(residual <= 1e-10,
          "haar_grid: Schur orthogonality self-test failed, residual " +
              std::to_string(residual));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(two_band, grid);
  return grid;
}

bool same_grid(const QuadratureGrid& a, const QuadratureGrid& b) {
  return a.two_band() == b.two_band() && a.n_alpha() == b.n_alpha() &&
         a.n_beta() == b.n_beta() && a.n_gamma() == b.n_gamma();
}

}  // namespace su2para
