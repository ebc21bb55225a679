#include "su2para/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "su2para/irreps.hpp"

namespace su2para {

namespace {

// wigner_d at the Gauss-Legendre beta nodes, keyed by (n_beta, two_j); the
// nodes are determined by n_beta alone.
const std::vector<MatrixXd>& d_at_beta(const QuadratureGrid& grid, int two_j) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<MatrixXd>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(grid.n_beta(), two_j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<MatrixXd> tab(grid.n_beta());
  for (int ib = 0; ib < grid.n_beta(); ++ib)
    tab[ib] = wigner_d(two_j, grid.beta(ib));
  return cache.emplace(key, std::move(tab)).first->second;
}

int freq_index(int two_m, int two_band) { return two_m + two_band; }

}  // namespace

SpectralFunction SpectralFunction::zero(int two_band) {
  SpectralFunction f;
  f.two_band = two_band;
  f.coeff.resize(two_band + 1);
  for (int k = 0; k <= two_band; ++k)
    f.coeff[k] = MatrixXcd::Zero(k + 1, k + 1);
  return f;
}

SpectralFunction entry_function(int two_j, int a, int b) {
  SpectralFunction f = SpectralFunction::zero(two_j);
  f.block(two_j)(b, a) = 1.0 / dim_of(two_j);
  return f;
}

SpectralFunction add(const SpectralFunction& f, const SpectralFunction& g) {
  SpectralFunction out = SpectralFunction::zero(std::max(f.two_band, g.two_band));
  for (int k = 0; k <= f.two_band; ++k) out.coeff[k] += f.coeff[k];
  for (int k = 0; k <= g.two_band; ++k) out.coeff[k] += g.coeff[k];
  return out;
}

SpectralFunction scaled(cplx s, const SpectralFunction& f) {
  SpectralFunction out = f;
  for (auto& m : out.coeff) m *= s;
  return out;
}

SpectralFunction scale_blocks(const SpectralFunction& f,
                              const std::function<double(int)>& h) {
  SpectralFunction out = f;
  for (int k = 0; k <= f.two_band; ++k) out.coeff[k] *= h(k);
  return out;
}

SpectralFunction truncated(const SpectralFunction& f, int two_band) {
  SpectralFunction out = SpectralFunction::zero(two_band);
  for (int k = 0; k <= std::min(two_band, f.two_band); ++k)
    out.coeff[k] = f.coeff[k];
  return out;
}

GridFunction inverse_transform(const SpectralFunction& f,
                               std::shared_ptr<const QuadratureGrid> grid) {
  const QuadratureGrid& g = *grid;
  const int B2 = f.two_band;
  const int nfreq = 2 * B2 + 1;
  const int na = g.n_alpha(), nb = g.n_beta(), ng = g.n_gamma();

  // beta stage: C(fm_b, ib*nfreq + fm_a) = sum_j d_j fhat(j)_{ab} d^j_{ba}(beta)
  MatrixXcd C = MatrixXcd::Zero(nfreq, nb * nfreq);
  for (int two_j = 0; two_j <= B2; ++two_j) {
    const MatrixXcd& block = f.coeff[two_j];
    if (block.cwiseAbs().maxCoeff() == 0.0) continue;
    const auto& dtab = d_at_beta(g, two_j);
    const double dj = dim_of(two_j);
    for (int ib = 0; ib < nb; ++ib) {
      const MatrixXd& dm = dtab[ib];
      for (int a = 0; a < dim_of(two_j); ++a) {
        const int fa = freq_index(2 * a - two_j, B2);
        for (int b = 0; b < dim_of(two_j); ++b) {
          const int fb = freq_index(2 * b - two_j, B2);
          C(fb, ib * nfreq + fa) += dj * block(a, b) * dm(b, a);
        }
      }
    }
  }

  // alpha stage: T(ia, ib*nfreq+fa) = sum_fb exp(-i m_b alpha_ia) C(fb, .)
  MatrixXcd Ea(na, nfreq);
  for (int ia = 0; ia < na; ++ia)
    for (int fm = 0; fm < nfreq; ++fm)
      Ea(ia, fm) = std::polar(1.0, -0.5 * (fm - B2) * g.alpha(ia));
  MatrixXcd T = Ea * C;

  // gamma stage
  MatrixXcd Eg(nfreq, ng);
  for (int fm = 0; fm < nfreq; ++fm)
    for (int ig = 0; ig < ng; ++ig)
      Eg(fm, ig) = std::polar(1.0, -0.5 * (fm - B2) * g.gamma(ig));

  GridFunction out;
  out.grid = grid;
  out.values.resize(g.node_count());
  for (int ia = 0; ia < na; ++ia) {
    MatrixXcd slab(nb, nfreq);
    for (int ib = 0; ib < nb; ++ib)
      for (int fm = 0; fm < nfreq; ++fm) slab(ib, fm) = T(ia, ib * nfreq + fm);
    MatrixXcd vals = slab * Eg;  // (nb, ng)
    for (int ib = 0; ib < nb; ++ib)
      for (int ig = 0; ig < ng; ++ig)
        out.values[g.node_index(ia, ib, ig)] = vals(ib, ig);
  }
  return out;
}

SpectralFunction forward_transform(const GridFunction& f, int out_two_band) {
  const QuadratureGrid& g = *f.grid;
  require(g.two_band() >= out_two_band,
          "forward_transform: grid bandlimit below requested band");
  const int B2 = out_two_band;
  const int nfreq = 2 * B2 + 1;
  const int na = g.n_alpha(), nb = g.n_beta(), ng = g.n_gamma();

  // gamma stage: G((ia,ib), fm) = (1/ng) sum_ig f exp(+i m gamma)
  MatrixXcd Eg(ng, nfreq);
  for (int ig = 0; ig < ng; ++ig)
    for (int fm = 0; fm < nfreq; ++fm)
      Eg(ig, fm) = std::polar(1.0, 0.5 * (fm - B2) * g.gamma(ig)) / double(ng);
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      V(f.values.data(), na * nb, ng);
  MatrixXcd G = V * Eg;  // (na*nb, nfreq)

  // alpha stage: H(fmu, ib*nfreq+fnu) = (1/na) sum_ia exp(+i m alpha) G
  MatrixXcd A(na, nb * nfreq);
  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib)
      for (int fm = 0; fm < nfreq; ++fm)
        A(ia, ib * nfreq + fm) = G(ia * nb + ib, fm);
  MatrixXcd Ea(nfreq, na);
  for (int fm = 0; fm < nfreq; ++fm)
    for (int ia = 0; ia < na; ++ia)
      Ea(fm, ia) = std::polar(1.0, 0.5 * (fm - B2) * g.alpha(ia)) / double(na);
  MatrixXcd H = Ea * A;  // (nfreq, nb*nfreq)

  // beta stage: fhat(j)_{ab} = sum_ib w_b d^j_{ba}(beta) H(fm_b, ib*nfreq+fm_a)
  SpectralFunction out = SpectralFunction::zero(B2);
  for (int two_j = 0; two_j <= B2; ++two_j) {
    const auto& dtab = d_at_beta(g, two_j);
    MatrixXcd& block = out.coeff[two_j];
    const int d = dim_of(two_j);
    for (int ib = 0; ib < nb; ++ib) {
      const MatrixXd& dm = dtab[ib];
      const double w = g.beta_weight(ib);
      for (int a = 0; a < d; ++a) {
        const int fa = freq_index(2 * a - two_j, B2);
        for (int b = 0; b < d; ++b) {
          const int fb = freq_index(2 * b - two_j, B2);
          block(a, b) += w * dm(b, a) * H(fb, ib * nfreq + fa);
        }
      }
    }
  }
  return out;
}

cplx evaluate(const SpectralFunction& f, const EulerAngles& e) {
  cplx acc = 0.0;
  for (int two_j = 0; two_j <= f.two_band; ++two_j) {
    if (f.coeff[two_j].cwiseAbs().maxCoeff() == 0.0) continue;
    acc += double(dim_of(two_j)) *
           (f.coeff[two_j] * wigner_D(two_j, e)).trace();
  }
  return acc;
}

cplx evaluate(const SpectralFunction& f, const GroupPoint& g) {
  return evaluate(f, to_euler(g));
}

double plancherel_norm(const SpectralFunction& f) {
  double acc = 0.0;
  for (int k = 0; k <= f.two_band; ++k)
    acc += dim_of(k) * f.coeff[k].squaredNorm();
  return std::sqrt(acc);
}

double sobolev_norm(const SpectralFunction& f, double s) {
  double acc = 0.0;
  for (int k = 0; k <= f.two_band; ++k)
    acc += dim_of(k) * std::pow(xi_bracket(k), 2.0 * s) *
           f.coeff[k].squaredNorm();
  return std::sqrt(acc);
}

cplx l2_inner(const SpectralFunction& f, const SpectralFunction& g) {
  cplx acc = 0.0;
  const int B2 = std::min(f.two_band, g.two_band);
  for (int k = 0; k <= B2; ++k)
    acc += double(dim_of(k)) * (g.coeff[k].adjoint() * f.coeff[k]).trace();
  return acc;
}

double l2_norm(const GridFunction& f) {
  const QuadratureGrid& g = *f.grid;
  double acc = 0.0;
  for (int ia = 0; ia < g.n_alpha(); ++ia)
    for (int ib = 0; ib < g.n_beta(); ++ib) {
      const double w = g.node_weight(ib);
      for (int ig = 0; ig < g.n_gamma(); ++ig)
        acc += w * std::norm(f.values[g.node_index(ia, ib, ig)]);
    }
  return std::sqrt(acc);
}

double sup_norm(const GridFunction& f) {
  return f.values.cwiseAbs().maxCoeff();
}

GridFunction convolve(const GridFunction& f, const SpectralFunction& g) {
  const QuadratureGrid& q = *f.grid;
  GridFunction out;
  out.grid = f.grid;
  out.values = VectorXcd::Zero(q.node_count());
  // Cache D^j(y)^* fhat-style evaluation: for each node y store the group
  // matrix; evaluation of g at y^{-1}x walks the spectral blocks directly.
  std::vector<GroupPoint> pts;
  pts.reserve(q.node_count());
  for (int ia = 0; ia < q.n_alpha(); ++ia)
    for (int ib = 0; ib < q.n_beta(); ++ib)
      for (int ig = 0; ig < q.n_gamma(); ++ig)
        pts.push_back(q.node_point(ia, ib, ig));
  std::vector<double> wts(q.node_count());
  {
    long idx = 0;
    for (int ia = 0; ia < q.n_alpha(); ++ia)
      for (int ib = 0; ib < q.n_beta(); ++ib)
        for (int ig = 0; ig < q.n_gamma(); ++ig) wts[idx++] = q.node_weight(ib);
  }
  for (long ix = 0; ix < q.node_count(); ++ix) {
    cplx acc = 0.0;
    for (long iy = 0; iy < q.node_count(); ++iy) {
      const cplx fy = f.values[iy];
      if (fy == cplx(0.0, 0.0)) continue;
      const GroupPoint rel = multiply(inverse(pts[iy]), pts[ix]);
      acc += wts[iy] * fy * evaluate(g, rel);
    }
    out.values[ix] = acc;
  }
  return out;
}

BandedResult product(const SpectralFunction& f, const SpectralFunction& g,
                     int out_two_band) {
  const int full = f.two_band + g.two_band;
  auto grid = haar_grid(full);
  GridFunction fg = inverse_transform(f, grid);
  GridFunction gg = inverse_transform(g, grid);
  GridFunction prod;
  prod.grid = grid;
  prod.values = fg.values.cwiseProduct(gg.values);
  SpectralFunction whole = forward_transform(prod, full);
  BandedResult res;
  res.fn = truncated(whole, std::min(out_two_band, full));
  const double total = plancherel_norm(whole);
  double kept = plancherel_norm(res.fn);
  if (total > 0.0) {
    const double lost2 = std::max(0.0, total * total - kept * kept);
    res.discarded_rel = std::sqrt(lost2) / total;
  }
  return res;
}

double verify_schur(const QuadratureGrid& grid, int two_band) {
  double worst = 0.0;
  auto self = std::make_shared<QuadratureGrid>(grid.two_band());
  // Evaluate each entry function on the grid by its factorized form, forward
  // transform, and compare against the Schur prediction.
  const int na = grid.n_alpha(), nb = grid.n_beta(), ng = grid.n_gamma();
  for (int two_j = 0; two_j <= two_band; ++two_j) {
    const int d = dim_of(two_j);
    const auto& dtab = d_at_beta(grid, two_j);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        GridFunction fn;
        fn.grid = self;
        fn.values.resize(grid.node_count());
        const double ma = m_of_index(two_j, a), mb = m_of_index(two_j, b);
        for (int ia = 0; ia < na; ++ia) {
          const cplx pa = std::polar(1.0, -ma * grid.alpha(ia));
          for (int ib = 0; ib < nb; ++ib) {
            const cplx pab = pa * dtab[ib](a, b);
            for (int ig = 0; ig < ng; ++ig)
              fn.values[grid.node_index(ia, ib, ig)] =
                  pab * std::polar(1.0, -mb * grid.gamma(ig));
          }
        }
        SpectralFunction got = forward_transform(fn, two_band);
        SpectralFunction want = entry_function(two_j, a, b);
        for (int k = 0; k <= two_band; ++k) {
          MatrixXcd diff = got.coeff[k];
          if (k == two_j) diff -= want.coeff[k];
          worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return worst;
}

double verify_schur(const QuadratureGrid& grid) {
  return verify_schur(grid, grid.two_band());
}

}  // namespace su2para
