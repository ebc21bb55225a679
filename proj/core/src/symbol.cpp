#include "su2para/symbol.hpp"

#include <array>
#include <cmath>

#include "su2para/quadrature.hpp"
#include "su2para/windows.hpp"

namespace su2para {

namespace {

int check_band(int band, const char* what) {
  require(band >= 0, std::string("Symbol: negative band for ") + what);
  return band;
}

// Deterministic operator 2-norm estimate by power iteration on M^* M.
double op_norm_estimate(const MatrixXcd& m, int iters = 24) {
  const int n = int(m.cols());
  if (n == 0) return 0.0;
  if (n == 1) return std::abs(m(0, 0));
  VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = cplx(1.0 + 0.01 * i, 0.02 * (i % 3));
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < iters; ++it) {
    VectorXcd w = m.adjoint() * (m * v);
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    v = w / nw;
    sigma = std::sqrt(nw);
  }
  return sigma;
}

}  // namespace

Symbol::Symbol(int two_xi_band, int two_x_band)
    : two_xi_band_(check_band(two_xi_band, "xi")),
      two_x_band_(check_band(two_x_band, "x")) {
  data_.resize(two_xi_band_ + 1);
  for (int two_j = 0; two_j <= two_xi_band_; ++two_j) {
    const int d = dim_of(two_j);
    data_[two_j].resize(two_x_band_ + 1);
    for (int two_eta = 0; two_eta <= two_x_band_; ++two_eta) {
      const int de = dim_of(two_eta);
      data_[two_j][two_eta].assign(size_t(de) * de, MatrixXcd::Zero(d, d));
    }
  }
}

std::vector<MatrixXcd>& Symbol::tensor(int two_j, int two_eta) {
  require(two_j >= 0 && two_j <= two_xi_band_ && two_eta >= 0 &&
              two_eta <= two_x_band_,
          "Symbol::tensor: index out of band");
  return data_[two_j][two_eta];
}

const std::vector<MatrixXcd>& Symbol::tensor(int two_j, int two_eta) const {
  require(two_j >= 0 && two_j <= two_xi_band_ && two_eta >= 0 &&
              two_eta <= two_x_band_,
          "Symbol::tensor: index out of band");
  return data_[two_j][two_eta];
}

MatrixXcd Symbol::entry_coeff(int two_j, int two_eta, int w, int v) const {
  const auto& t = tensor(two_j, two_eta);
  const int de = dim_of(two_eta);
  MatrixXcd c(de, de);
  for (int a = 0; a < de; ++a)
    for (int b = 0; b < de; ++b) c(a, b) = t[size_t(a) * de + b](w, v);
  return c;
}

void Symbol::set_entry_coeff(int two_j, int two_eta, int w, int v,
                             const MatrixXcd& coeff) {
  auto& t = tensor(two_j, two_eta);
  const int de = dim_of(two_eta);
  require(coeff.rows() == de && coeff.cols() == de,
          "Symbol::set_entry_coeff: coefficient shape");
  for (int a = 0; a < de; ++a)
    for (int b = 0; b < de; ++b) t[size_t(a) * de + b](w, v) = coeff(a, b);
}

MatrixXcd Symbol::at(const GroupPoint& x, int two_j) const {
  require(two_j >= 0 && two_j <= two_xi_band_, "Symbol::at: degree out of band");
  const int d = dim_of(two_j);
  MatrixXcd m = MatrixXcd::Zero(d, d);
  for (int two_eta = 0; two_eta <= two_x_band_; ++two_eta) {
    const int de = dim_of(two_eta);
    const MatrixXcd rep = wigner_D(two_eta, x);
    const auto& t = data_[two_j][two_eta];
    for (int a = 0; a < de; ++a)
      for (int b = 0; b < de; ++b) {
        const cplx weight = double(de) * rep(b, a);
        if (weight != cplx(0, 0)) m.noalias() += weight * t[size_t(a) * de + b];
      }
  }
  return m;
}

Symbol& Symbol::operator+=(const Symbol& other) {
  if (other.two_xi_band_ < 0) return *this;
  if (two_xi_band_ < 0) {
    *this = other;
    return *this;
  }
  if (other.two_xi_band_ > two_xi_band_ || other.two_x_band_ > two_x_band_) {
    Symbol grown(std::max(two_xi_band_, other.two_xi_band_),
                 std::max(two_x_band_, other.two_x_band_));
    for (int two_j = 0; two_j <= two_xi_band_; ++two_j)
      for (int two_eta = 0; two_eta <= two_x_band_; ++two_eta)
        grown.data_[two_j][two_eta] = data_[two_j][two_eta];
    *this = std::move(grown);
  }
  for (int two_j = 0; two_j <= other.two_xi_band_; ++two_j)
    for (int two_eta = 0; two_eta <= other.two_x_band_; ++two_eta) {
      auto& dst = data_[two_j][two_eta];
      const auto& src = other.data_[two_j][two_eta];
      for (size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
    }
  return *this;
}

Symbol& Symbol::operator*=(double c) {
  for (auto& per_j : data_)
    for (auto& per_eta : per_j)
      for (auto& m : per_eta) m *= c;
  return *this;
}

double Symbol::data_norm() const {
  double acc = 0.0;
  for (const auto& per_j : data_)
    for (const auto& per_eta : per_j)
      for (const auto& m : per_eta) acc += m.squaredNorm();
  return std::sqrt(acc);
}

// ---- constructors ----------------------------------------------------------

Symbol multiplier_symbol(const std::function<double(double)>& h,
                         int two_xi_band) {
  Symbol s(two_xi_band, 0);
  for (int two_j = 0; two_j <= two_xi_band; ++two_j)
    s.tensor(two_j, 0)[0] =
        h(xi_norm(two_j)) * MatrixXcd::Identity(dim_of(two_j), dim_of(two_j));
  return s;
}

Symbol vector_field_symbol(const Matrix2cd& X, int two_xi_band) {
  Symbol s(two_xi_band, 0);
  for (int two_j = 0; two_j <= two_xi_band; ++two_j)
    s.tensor(two_j, 0)[0] = drep(two_j, X);
  return s;
}

Symbol coefficient_symbol(const SpectralFunction& c, int two_xi_band) {
  Symbol s(two_xi_band, c.two_band);
  for (int two_j = 0; two_j <= two_xi_band; ++two_j) {
    const int d = dim_of(two_j);
    for (int two_eta = 0; two_eta <= c.two_band; ++two_eta) {
      const int de = dim_of(two_eta);
      auto& t = s.tensor(two_j, two_eta);
      const MatrixXcd& ch = c.block(two_eta);
      for (int a = 0; a < de; ++a)
        for (int b = 0; b < de; ++b)
          t[size_t(a) * de + b] = ch(a, b) * MatrixXcd::Identity(d, d);
    }
  }
  return s;
}

Symbol coefficient_field_symbol(const SpectralFunction& c, const Matrix2cd& X,
                                int two_xi_band) {
  Symbol s(two_xi_band, c.two_band);
  for (int two_j = 0; two_j <= two_xi_band; ++two_j) {
    const MatrixXcd rep = drep(two_j, X);
    for (int two_eta = 0; two_eta <= c.two_band; ++two_eta) {
      const int de = dim_of(two_eta);
      auto& t = s.tensor(two_j, two_eta);
      const MatrixXcd& ch = c.block(two_eta);
      for (int a = 0; a < de; ++a)
        for (int b = 0; b < de; ++b) t[size_t(a) * de + b] = ch(a, b) * rep;
    }
  }
  return s;
}

// ---- calculus --------------------------------------------------------------

Symbol x_derivative(const Symbol& a, const Matrix2cd& X) {
  Symbol out(a.xi_band(), a.x_band());
  for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
    const int de = dim_of(two_eta);
    const MatrixXcd rep = drep(two_eta, X);
    for (int two_j = 0; two_j <= a.xi_band(); ++two_j) {
      const auto& src = a.tensor(two_j, two_eta);
      auto& dst = out.tensor(two_j, two_eta);
      // x-Fourier data maps coeff(eta) -> d eta(X) coeff(eta), rowwise in a.
      for (int r = 0; r < de; ++r)
        for (int b = 0; b < de; ++b) {
          MatrixXcd acc = MatrixXcd::Zero(dim_of(two_j), dim_of(two_j));
          for (int c = 0; c < de; ++c) {
            const cplx w = rep(r, c);
            if (w != cplx(0, 0)) acc.noalias() += w * src[size_t(c) * de + b];
          }
          dst[size_t(r) * de + b] = std::move(acc);
        }
    }
  }
  return out;
}

Symbol difference_op(const Symbol& a, int r, int c) {
  require(r >= 0 && r < 2 && c >= 0 && c < 2,
          "difference_op: tuple index out of range");
  const int out_xi = a.xi_band() + 1;
  Symbol out(out_xi, a.x_band());
  for (int two_xi = 0; two_xi <= out_xi; ++two_xi) {
    const int d = dim_of(two_xi);
    for (int two_zeta = std::abs(two_xi - 1); two_zeta <= two_xi + 1;
         two_zeta += 2) {
      if (two_zeta > a.xi_band()) continue;
      const int dz = dim_of(two_zeta);
      const MatrixXd& u = cg_matrix(1, two_zeta, two_xi);
      const MatrixXd ur = u.middleRows(r * dz, dz);  // (z, v)
      const MatrixXd uc = u.middleRows(c * dz, dz);  // (w, u)
      const double scale = double(dz) / double(d);
      for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
        const auto& src = a.tensor(two_zeta, two_eta);
        auto& dst = out.tensor(two_xi, two_eta);
        for (size_t k = 0; k < src.size(); ++k)
          dst[k].noalias() +=
              scale * (uc.transpose() * src[k] * ur);
      }
    }
    if (r == c && two_xi <= a.xi_band()) {
      for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
        const auto& src = a.tensor(two_xi, two_eta);
        auto& dst = out.tensor(two_xi, two_eta);
        for (size_t k = 0; k < src.size(); ++k) dst[k] -= src[k];
      }
    }
  }
  return out;
}

Symbol difference_power(const Symbol& a, const std::array<int, 3>& beta) {
  // coordinate components q_11, q_12, q_21 of the fundamental tuple
  static const int rows[3] = {0, 0, 1};
  static const int cols[3] = {0, 1, 0};
  Symbol out = a;
  for (int comp = 0; comp < 3; ++comp)
    for (int rep = 0; rep < beta[comp]; ++rep)
      out = difference_op(out, rows[comp], cols[comp]);
  return out;
}

Symbol symbol_product(const Symbol& a, const Symbol& b) {
  const int xi_band = std::min(a.xi_band(), b.xi_band());
  const int x_band = a.x_band() + b.x_band();
  if (a.x_band() == 0 || b.x_band() == 0) {
    // One factor x-constant: its value matrix multiplies the other factor's
    // coefficient blocks directly (no grid, no quadrature error).  Keeps
    // multiplier algebra exact and composition sums with multipliers cheap.
    const bool left = a.x_band() == 0;
    const Symbol& s = left ? b : a;
    Symbol out(xi_band, x_band);
    for (int two_j = 0; two_j <= xi_band; ++two_j) {
      const MatrixXcd& m = (left ? a : b).tensor(two_j, 0)[0];
      for (int two_eta = 0; two_eta <= x_band; ++two_eta) {
        const auto& t = s.tensor(two_j, two_eta);
        auto& o = out.tensor(two_j, two_eta);
        for (size_t k = 0; k < t.size(); ++k)
          o[k].noalias() = left ? MatrixXcd(m * t[k]) : MatrixXcd(t[k] * m);
      }
    }
    return out;
  }
  return symbol_product_spectral(a, b);
}

Symbol symbol_product_spectral(const Symbol& a, const Symbol& b,
                               int out_x_cap) {
  const int xi_band = std::min(a.xi_band(), b.xi_band());
  const int x_out = (out_x_cap >= 0)
                        ? std::min(out_x_cap, a.x_band() + b.x_band())
                        : a.x_band() + b.x_band();
  Symbol out(xi_band, x_out);
  for (int two_j = 0; two_j <= xi_band; ++two_j) {
    const int d = dim_of(two_j);
    // Value-coefficient tensors: f_{wv}(x) = sum F(eta)_{a1 b1} D^eta_{a1 b1},
    // F(eta)_{a1 b1} = d_eta hat{f}(eta)_{b1 a1} (transposed x-indices).
    auto values = [](const Symbol& s, int two_j_, int two_eta) {
      const auto& t = s.tensor(two_j_, two_eta);
      const int de = dim_of(two_eta);
      std::vector<MatrixXcd> val(t.size());
      for (int a1 = 0; a1 < de; ++a1)
        for (int b1 = 0; b1 < de; ++b1)
          val[size_t(a1) * de + b1] = double(de) * t[size_t(b1) * de + a1];
      return val;
    };
    std::vector<std::vector<MatrixXcd>> aval(a.x_band() + 1), bval(b.x_band() + 1);
    std::vector<bool> alive(a.x_band() + 1, false), blive(b.x_band() + 1, false);
    for (int e = 0; e <= a.x_band(); ++e) {
      aval[e] = values(a, two_j, e);
      for (const auto& m : aval[e]) alive[e] = alive[e] || !m.isZero(0);
    }
    for (int e = 0; e <= b.x_band(); ++e) {
      bval[e] = values(b, two_j, e);
      for (const auto& m : bval[e]) blive[e] = blive[e] || !m.isZero(0);
    }
    // Accumulate the product in value layout, then transpose back to hats.
    std::vector<std::vector<MatrixXcd>> oval(size_t(x_out) + 1);
    for (int e = 0; e <= x_out; ++e)
      oval[e].assign(size_t(dim_of(e)) * dim_of(e), MatrixXcd::Zero(d, d));
    for (int e1 = 0; e1 <= a.x_band(); ++e1) {
      if (!alive[e1]) continue;
      const int d1 = dim_of(e1);
      for (int e2 = 0; e2 <= b.x_band(); ++e2) {
        if (!blive[e2]) continue;
        const int d2 = dim_of(e2);
        const int e_lo = std::abs(e1 - e2);
        const int e_hi = std::min(e1 + e2, x_out);
        if (e_lo > e_hi) continue;
        std::vector<const MatrixXd*> cg(size_t(e_hi) + 1, nullptr);
        for (int e = e_lo; e <= e_hi; e += 2) cg[e] = &cg_matrix(e1, e2, e);
        for (int a1 = 0; a1 < d1; ++a1)
          for (int b1 = 0; b1 < d1; ++b1) {
            const MatrixXcd& am = aval[e1][size_t(a1) * d1 + b1];
            if (am.isZero(0)) continue;
            for (int a2 = 0; a2 < d2; ++a2)
              for (int b2 = 0; b2 < d2; ++b2) {
                const MatrixXcd& bm = bval[e2][size_t(a2) * d2 + b2];
                if (bm.isZero(0)) continue;
                const MatrixXcd prod = am * bm;  // the xi-slot matrix product
                const int two_ma = (2 * a1 - e1) + (2 * a2 - e2);
                const int two_mb = (2 * b1 - e1) + (2 * b2 - e2);
                for (int e = e_lo; e <= e_hi; e += 2) {
                  if (std::abs(two_ma) > e || std::abs(two_mb) > e) continue;
                  const int ia = (two_ma + e) / 2, ib = (two_mb + e) / 2;
                  const double w = (*cg[e])(a1 * d2 + a2, ia) *
                                   (*cg[e])(b1 * d2 + b2, ib);
                  if (w != 0.0)
                    oval[e][size_t(ia) * dim_of(e) + ib] += w * prod;
                }
              }
          }
      }
    }
    for (int e = 0; e <= x_out; ++e) {
      const int de = dim_of(e);
      auto& t = out.tensor(two_j, e);
      for (int ia = 0; ia < de; ++ia)
        for (int ib = 0; ib < de; ++ib)
          t[size_t(ia) * de + ib] = oval[e][size_t(ib) * de + ia] / double(de);
    }
  }
  return out;
}

Symbol symbol_product_grid(const Symbol& a, const Symbol& b) {
  const int xi_band = std::min(a.xi_band(), b.xi_band());
  const int x_band = a.x_band() + b.x_band();
  if (a.data_norm() == 0.0 || b.data_norm() == 0.0)
    return Symbol(xi_band, x_band);
  auto grid = haar_grid(x_band);
  const int n = grid->node_count();
  std::vector<GroupPoint> pts;
  pts.reserve(n);
  for (int idx = 0; idx < n; ++idx) pts.push_back(grid->node_point(idx));

  Symbol out(xi_band, x_band);
  for (int two_j = 0; two_j <= xi_band; ++two_j) {
    const int d = dim_of(two_j);
    std::vector<VectorXcd> entry_vals(size_t(d) * d, VectorXcd(n));
    for (int idx = 0; idx < n; ++idx) {
      const MatrixXcd prod = a.at(pts[idx], two_j) * b.at(pts[idx], two_j);
      for (int w = 0; w < d; ++w)
        for (int v = 0; v < d; ++v) entry_vals[size_t(w) * d + v](idx) = prod(w, v);
    }
    for (int w = 0; w < d; ++w)
      for (int v = 0; v < d; ++v) {
        GridFunction gf{grid, std::move(entry_vals[size_t(w) * d + v])};
        SpectralFunction coeff = forward_transform(gf, x_band);
        for (int two_eta = 0; two_eta <= x_band; ++two_eta)
          out.set_entry_coeff(two_j, two_eta, w, v, coeff.block(two_eta));
      }
  }
  return out;
}

Symbol symbol_adjoint(const Symbol& a) {
  Symbol out(a.xi_band(), a.x_band());
  for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
    // conj of a degree-eta function stays degree eta:
    // hat{conj f}(eta) = eps^T conj(hat f(eta)) eps.
    const MatrixXd eps = conjugation_intertwiner(two_eta);
    for (int two_j = 0; two_j <= a.xi_band(); ++two_j) {
      const int d = dim_of(two_j);
      for (int w = 0; w < d; ++w)
        for (int v = 0; v < d; ++v) {
          const MatrixXcd coeff = a.entry_coeff(two_j, two_eta, v, w);
          out.set_entry_coeff(two_j, two_eta, w, v,
                              eps.transpose() * coeff.conjugate() * eps);
        }
    }
  }
  return out;
}

// ---- quantization ----------------------------------------------------------

SpectralFunction quantize_grid(const Symbol& a, const SpectralFunction& f,
                               int out_two_band) {
  const int grid_band =
      std::max(out_two_band, std::min(f.two_band, a.xi_band()) + a.x_band());
  auto grid = haar_grid(grid_band);
  const int n = grid->node_count();
  VectorXcd vals = VectorXcd::Zero(n);
  const int xi_max = std::min(f.two_band, a.xi_band());
  for (int idx = 0; idx < n; ++idx) {
    const GroupPoint x = grid->node_point(idx);
    cplx acc(0, 0);
    for (int two_j = 0; two_j <= xi_max; ++two_j) {
      const MatrixXcd& fc = f.block(two_j);
      if (fc.size() == 0 || fc.isZero(0)) continue;
      const MatrixXcd ax = a.at(x, two_j);
      const MatrixXcd rep = wigner_D(two_j, x);
      acc += double(dim_of(two_j)) * (ax * fc * rep).trace();
    }
    vals(idx) = acc;
  }
  GridFunction gf{grid, std::move(vals)};
  return forward_transform(gf, out_two_band);
}

Symbol symbol_from_application(
    const std::function<SpectralFunction(const SpectralFunction&)>& apply,
    int two_xi_band, int two_x_band, int out_two_band) {
  Symbol out(two_xi_band, two_x_band);
  for (int two_j = 0; two_j <= two_xi_band; ++two_j) {
    const int d = dim_of(two_j);
    auto grid = haar_grid(out_two_band + two_j);
    const int n = grid->node_count();
    // (A xi)(x): one operator application per matrix entry of xi.
    std::vector<VectorXcd> g_vals(size_t(d) * d);
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v) {
        SpectralFunction image = apply(entry_function(two_j, u, v));
        g_vals[size_t(u) * d + v] = inverse_transform(image, grid).values;
      }
    std::vector<VectorXcd> sigma_vals(size_t(d) * d, VectorXcd(n));
    MatrixXcd gmat(d, d);
    for (int idx = 0; idx < n; ++idx) {
      for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) gmat(u, v) = g_vals[size_t(u) * d + v](idx);
      const GroupPoint x = grid->node_point(idx);
      const MatrixXcd sig = wigner_D(two_j, x).adjoint() * gmat;
      for (int w = 0; w < d; ++w)
        for (int v = 0; v < d; ++v) sigma_vals[size_t(w) * d + v](idx) = sig(w, v);
    }
    for (int w = 0; w < d; ++w)
      for (int v = 0; v < d; ++v) {
        GridFunction gf{grid, std::move(sigma_vals[size_t(w) * d + v])};
        SpectralFunction coeff = forward_transform(gf, two_x_band);
        for (int two_eta = 0; two_eta <= two_x_band; ++two_eta)
          out.set_entry_coeff(two_j, two_eta, w, v, coeff.block(two_eta));
      }
  }
  return out;
}

cplx conv_kernel(const Symbol& a, const GroupPoint& x, const GroupPoint& y) {
  cplx acc(0, 0);
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j)
    acc += double(dim_of(two_j)) *
           (a.at(x, two_j) * wigner_D(two_j, y)).trace();
  return acc;
}

// ---- size estimates --------------------------------------------------------

std::vector<double> per_degree_sup_norms(const Symbol& a) {
  auto grid = haar_grid(std::max(a.x_band(), 0));
  const int n = grid->node_count();
  std::vector<GroupPoint> pts;
  pts.reserve(n);
  for (int idx = 0; idx < n; ++idx) pts.push_back(grid->node_point(idx));
  std::vector<double> norms(a.xi_band() + 1, 0.0);
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j)
    for (const auto& x : pts)
      norms[two_j] = std::max(norms[two_j], op_norm_estimate(a.at(x, two_j)));
  return norms;
}

DecayFit fit_decay(const std::vector<double>& norms, int two_lo, int two_hi) {
  DecayFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int two_j = two_lo; two_j <= two_hi && two_j < int(norms.size());
       ++two_j) {
    if (norms[two_j] <= 0) continue;
    const double x = std::log(xi_bracket(two_j));
    const double y = std::log(norms[two_j]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++fit.points;
  }
  require(fit.points >= 2, "fit_decay: not enough nonzero degrees");
  const double denom = fit.points * sxx - sx * sx;
  fit.slope = (fit.points * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / fit.points;
  return fit;
}

double class_norm(const Symbol& a, double m, int k, int l) {
  const auto basis = lie_algebra_basis();
  std::vector<std::array<int, 3>> betas;
  for (int b1 = 0; b1 <= k; ++b1)
    for (int b2 = 0; b2 + b1 <= k; ++b2)
      for (int b3 = 0; b3 + b2 + b1 <= k; ++b3)
        betas.push_back({b1, b2, b3});
  double worst = 0.0;
  for (const auto& beta : betas) {
    const int abs_beta = beta[0] + beta[1] + beta[2];
    Symbol diffed = difference_power(a, beta);
    for (int a1 = 0; a1 <= l; ++a1)
      for (int a2 = 0; a2 + a1 <= l; ++a2)
        for (int a3 = 0; a3 + a2 + a1 <= l; ++a3) {
          const int abs_alpha = a1 + a2 + a3;
          Symbol s = diffed;
          for (int rep = 0; rep < a1; ++rep) s = x_derivative(s, basis.E[0]);
          for (int rep = 0; rep < a2; ++rep) s = x_derivative(s, basis.E[1]);
          for (int rep = 0; rep < a3; ++rep) s = x_derivative(s, basis.E[2]);
          const auto norms = per_degree_sup_norms(s);
          for (int two_j = 0; two_j < int(norms.size()); ++two_j) {
            const double weight =
                std::pow(xi_bracket(two_j), -(m - abs_beta + abs_alpha));
            worst = std::max(worst, norms[two_j] * weight);
          }
        }
  }
  return worst;
}

namespace {

// Scale every x-frequency layer of the symbol by w(|eta|).
Symbol x_filtered(const Symbol& a, const std::function<double(double)>& w) {
  Symbol out = a;
  for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
    const double c = w(xi_norm(two_eta));
    for (int two_j = 0; two_j <= a.xi_band(); ++two_j)
      for (auto& block : out.tensor(two_j, two_eta)) block *= c;
  }
  return out;
}

}  // namespace

double rough_class_norm(const Symbol& a, double m, double r, int l) {
  std::vector<std::array<int, 3>> betas;
  for (int b1 = 0; b1 <= l; ++b1)
    for (int b2 = 0; b2 + b1 <= l; ++b2)
      for (int b3 = 0; b3 + b2 + b1 <= l; ++b3) betas.push_back({b1, b2, b3});
  const double top_mu = xi_norm(std::max(a.x_band(), 0));
  int shells = 0;
  while (std::ldexp(1.0, shells - 1) < top_mu) ++shells;
  double worst = 0.0;
  for (const auto& beta : betas) {
    const int abs_beta = beta[0] + beta[1] + beta[2];
    Symbol diffed = difference_power(a, beta);
    // Zygmund size in x per degree: dyadic x-shells, shell sup * 2^{r k}.
    std::vector<double> zyg(size_t(diffed.xi_band()) + 1, 0.0);
    for (int k = 0; k <= shells; ++k) {
      const double scale = std::ldexp(1.0, std::max(k - 1, 0));
      auto w = [&](double mu) {
        return k == 0 ? phi_window(mu) : theta_window(mu / scale);
      };
      const auto sup = per_degree_sup_norms(x_filtered(diffed, w));
      const double weight = std::pow(std::ldexp(1.0, k), r);
      for (size_t j = 0; j < sup.size(); ++j)
        zyg[j] = std::max(zyg[j], weight * sup[j]);
    }
    for (int two_j = 0; two_j < int(zyg.size()); ++two_j)
      worst = std::max(
          worst, zyg[two_j] * std::pow(xi_bracket(two_j), double(abs_beta) - m));
  }
  return worst;
}

// ---- quasi-homogeneous calculus --------------------------------------------

Symbol quasi_homogeneous(const std::function<cplx(cplx)>& f, const Symbol& b,
                         double m, double radius, int out_two_x_band) {
  if (out_two_x_band < 0)
    out_two_x_band = b.x_band() == 0 ? 0 : b.x_band() + 4;

  auto value_of = [&](const MatrixXcd& bx, double kappa) {
    // anti-Hermitian argument: diagonalize i*bx (Hermitian)
    const MatrixXcd herm = cplx(0, 1) * bx;
    require((herm - herm.adjoint()).norm() <= 1e-8 * (1.0 + herm.norm()),
            "quasi_homogeneous: symbol values must be anti-Hermitian");
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (herm + herm.adjoint()));
    const VectorXd lam = es.eigenvalues();
    require(lam.cwiseAbs().maxCoeff() <= radius,
            "quasi_homogeneous: spectrum escapes the analyticity radius");
    VectorXcd flam(lam.size());
    for (int i = 0; i < lam.size(); ++i) flam(i) = f(cplx(0, -lam(i)));
    return MatrixXcd(std::pow(kappa, m) * es.eigenvectors() *
                     flam.asDiagonal() * es.eigenvectors().adjoint());
  };

  if (b.x_band() == 0 && out_two_x_band == 0) {
    // x-constant argument: one diagonalization per degree.
    Symbol out(b.xi_band(), 0);
    for (int two_j = 0; two_j <= b.xi_band(); ++two_j) {
      if (two_j == 0) {
        if (m == 0.0) out.tensor(0, 0)[0](0, 0) = f(cplx(0, 0));
        continue;
      }
      const double kappa = xi_norm(two_j);
      out.tensor(two_j, 0)[0] = value_of(b.tensor(two_j, 0)[0] / kappa, kappa);
    }
    return out;
  }

  const int grid_band = out_two_x_band + 4;
  auto grid = haar_grid(std::max(grid_band, 0));
  const int n = grid->node_count();
  std::vector<GroupPoint> pts;
  pts.reserve(n);
  for (int idx = 0; idx < n; ++idx) pts.push_back(grid->node_point(idx));

  Symbol out(b.xi_band(), out_two_x_band);
  for (int two_j = 0; two_j <= b.xi_band(); ++two_j) {
    const int d = dim_of(two_j);
    if (two_j == 0) {
      // |xi| = 0 at the trivial degree: kappa^m f(b/kappa) is taken as the
      // m = 0 limit f(0), and as 0 for m != 0.
      if (m == 0.0) out.tensor(0, 0)[0](0, 0) = f(cplx(0, 0));
      continue;
    }
    const double kappa = xi_norm(two_j);
    std::vector<VectorXcd> entry_vals(size_t(d) * d, VectorXcd(n));
    for (int idx = 0; idx < n; ++idx) {
      const MatrixXcd val = value_of(b.at(pts[idx], two_j) / kappa, kappa);
      for (int w = 0; w < d; ++w)
        for (int v = 0; v < d; ++v)
          entry_vals[size_t(w) * d + v](idx) = val(w, v);
    }
    for (int w = 0; w < d; ++w)
      for (int v = 0; v < d; ++v) {
        GridFunction gf{grid, std::move(entry_vals[size_t(w) * d + v])};
        SpectralFunction coeff = forward_transform(gf, out_two_x_band);
        for (int two_eta = 0; two_eta <= out_two_x_band; ++two_eta)
          out.set_entry_coeff(two_j, two_eta, w, v, coeff.block(two_eta));
      }
  }
  return out;
}

}  // namespace su2para
