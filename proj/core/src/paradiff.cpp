#include "su2para/paradiff.hpp"

#include <cmath>

#include "su2para/clebsch.hpp"
#include "su2para/quadrature.hpp"

namespace su2para {

namespace {

// Block values of f on the grid, one vector per degree (any radial filter of
// f is then a weighted sum of these).
std::vector<VectorXcd> block_values(
    const SpectralFunction& f,
    const std::shared_ptr<const QuadratureGrid>& grid) {
  std::vector<VectorXcd> vals(f.two_band + 1);
  for (int two_j = 0; two_j <= f.two_band; ++two_j) {
    SpectralFunction one = SpectralFunction::zero(two_j);
    one.block(two_j) = f.block(two_j);
    vals[two_j] = inverse_transform(one, grid).values;
  }
  return vals;
}

VectorXcd weighted_sum(const std::vector<VectorXcd>& blocks,
                       const std::vector<double>& w, int nodes) {
  VectorXcd acc = VectorXcd::Zero(nodes);
  for (size_t j = 0; j < blocks.size(); ++j)
    if (w[j] != 0.0) acc += w[j] * blocks[j];
  return acc;
}

// Lattice verification of the cutoff invariants; hard-fails on violation.
void verify_cutoff(const AdmissibleCutoff& c, const char* who) {
  std::vector<double> lambdas;
  for (int two_j = 0; two_j <= 64; ++two_j) lambdas.push_back(xi_norm(two_j));
  for (double l = 0.0; l <= 40.0; l += 0.37) lambdas.push_back(l);
  for (double lambda : lambdas) {
    const double br = std::sqrt(1.0 + lambda * lambda);
    const double plateau = c.plateau_frac * c.delta * br;
    const double cut = c.delta * br;
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0})
      require(std::abs(c(f * plateau, lambda) - 1.0) <= 1e-9,
              std::string(who) + ": plateau violation");
    for (double f : {1.0, 1.01, 1.5, 3.0})
      require(std::abs(c(f * cut, lambda)) <= 1e-12,
              std::string(who) + ": support violation");
    // derivative-decay proxy: first differences in mu bounded by C/<l>
    const double h = br / 256.0;
    double slope = 0.0;
    for (double mu = 0.0; mu <= 2.0 * cut; mu += h)
      slope = std::max(slope, std::abs(c(mu + h, lambda) - c(mu, lambda)) / h);
    require(slope * br <= 64.0 / c.delta,
            std::string(who) + ": derivative-decay proxy violation");
  }
}

// The para-operators T_a, u -> T_u a, u -> R(a, u) share one shape: multiply
// the input block at degree xi by the coefficient block at degree eta with a
// scalar kernel weight w(eta, xi).  The apply contracts through the same
// Clebsch-Gordan couplings as the quantization of the scalar-per-block symbol
// w(eta, xi) a_eta(x) Id, just without materializing the tensors.
class ParaOperator final : public SpectralOperator {
 public:
  ParaOperator(SpectralFunction a, MatrixXd w, int in_band, int out_band)
      : a_(std::move(a)), w_(std::move(w)), in_(in_band), out_(out_band) {
    require(in_ >= 0 && out_ >= 0, "para operator: negative band");
  }

  int in_band() const override { return in_; }
  int out_band() const override { return out_; }

  SpectralFunction apply(const SpectralFunction& f) const override {
    require(f.two_band <= in_, "para operator: input exceeds band");
    SpectralFunction g = SpectralFunction::zero(out_);
    for (int two_xi = 0; two_xi <= f.two_band; ++two_xi) {
      const MatrixXcd& fc = f.block(two_xi);
      if (fc.size() == 0 || fc.isZero(0)) continue;
      const int dxi = dim_of(two_xi);
      for (int two_eta = 0; two_eta <= a_.two_band; ++two_eta) {
        const double w = w_(two_eta, two_xi);
        if (w == 0.0) continue;
        const MatrixXcd& c = a_.block(two_eta);
        if (c.isZero(0)) continue;
        const int de = dim_of(two_eta);
        const double pref = double(dxi) * double(de) * w;
        for (int two_zeta = std::abs(two_xi - two_eta);
             two_zeta <= two_xi + two_eta && two_zeta <= out_; two_zeta += 2) {
          const int dz = dim_of(two_zeta);
          const MatrixXd& u = cg_matrix(two_eta, two_xi, two_zeta);
          const double scale = pref / double(dz);
          MatrixXcd& out_block = g.block(two_zeta);
          for (int a = 0; a < de; ++a) {
            MatrixXcd va = MatrixXcd::Zero(dxi, dz);
            for (int b = 0; b < de; ++b) {
              if (c(a, b) == cplx(0.0, 0.0)) continue;
              va.noalias() += c(a, b) * u.middleRows(b * dxi, dxi);
            }
            out_block.noalias() +=
                scale * (u.middleRows(a * dxi, dxi).transpose() * (fc * va));
          }
        }
      }
    }
    return g;
  }

  SpectralFunction apply_adjoint(const SpectralFunction& h) const override {
    require(h.two_band <= out_, "para operator: adjoint input band");
    SpectralFunction g = SpectralFunction::zero(in_);
    for (int two_xi = 0; two_xi <= in_; ++two_xi) {
      const int dxi = dim_of(two_xi);
      MatrixXcd& out_block = g.block(two_xi);
      for (int two_eta = 0; two_eta <= a_.two_band; ++two_eta) {
        const double w = w_(two_eta, two_xi);
        if (w == 0.0) continue;
        const MatrixXcd& c = a_.block(two_eta);
        if (c.isZero(0)) continue;
        const int de = dim_of(two_eta);
        for (int two_zeta = std::abs(two_xi - two_eta);
             two_zeta <= two_xi + two_eta && two_zeta <= h.two_band;
             two_zeta += 2) {
          const MatrixXcd& hc = h.block(two_zeta);
          if (hc.size() == 0 || hc.isZero(0)) continue;
          const int dz = dim_of(two_zeta);
          const MatrixXd& u = cg_matrix(two_eta, two_xi, two_zeta);
          for (int a = 0; a < de; ++a) {
            MatrixXcd pa = MatrixXcd::Zero(dxi, dz);
            for (int b = 0; b < de; ++b) {
              if (c(a, b) == cplx(0.0, 0.0)) continue;
              pa.noalias() += std::conj(c(a, b)) * u.middleRows(b * dxi, dxi);
            }
            out_block.noalias() +=
                (double(de) * w) *
                ((u.middleRows(a * dxi, dxi) * hc) * pa.transpose());
          }
        }
      }
    }
    return g;
  }

 private:
  SpectralFunction a_;
  MatrixXd w_;
  int in_, out_;
};

enum class ParaKind { coeff, swap, remainder };

OpPtr make_para_operator(const SpectralFunction& a, double gap, int in_band,
                         int out_band, ParaKind kind) {
  MatrixXd w(a.two_band + 1, in_band + 1);
  for (int two_eta = 0; two_eta <= a.two_band; ++two_eta) {
    const double mu = xi_norm(two_eta);
    for (int two_j = 0; two_j <= in_band; ++two_j) {
      const double lam = xi_norm(two_j);
      switch (kind) {
        case ParaKind::coeff:
          w(two_eta, two_j) = para_kernel(gap, mu, lam);
          break;
        case ParaKind::swap:
          w(two_eta, two_j) = para_kernel(gap, lam, mu);
          break;
        case ParaKind::remainder:
          w(two_eta, two_j) =
              1.0 - para_kernel(gap, mu, lam) - para_kernel(gap, lam, mu);
          break;
      }
    }
  }
  return std::make_shared<ParaOperator>(a, std::move(w), in_band, out_band);
}

}  // namespace

// ---- cutoffs ----------------------------------------------------------------

MatrixXd AdmissibleCutoff::table(int two_x_band, int two_xi_band) const {
  MatrixXd t(two_x_band + 1, two_xi_band + 1);
  for (int two_eta = 0; two_eta <= two_x_band; ++two_eta)
    for (int two_j = 0; two_j <= two_xi_band; ++two_j)
      t(two_eta, two_j) = chi(xi_norm(two_eta), xi_norm(two_j));
  return t;
}

AdmissibleCutoff admissible_cutoff(double delta, double gap) {
  require(delta > 0.0 && delta < 0.5, "admissible_cutoff: need 0 < delta < 1/2");
  AdmissibleCutoff c;
  c.delta = delta;
  c.gap = gap;
  c.plateau_frac = 0.5;
  c.chi = [delta](double mu, double lambda) {
    return phi_window(mu / (delta * std::sqrt(1.0 + lambda * lambda)));
  };
  verify_cutoff(c, "admissible_cutoff");
  return c;
}

AdmissibleCutoff canonical_cutoff(double gap) {
  require(gap > 4.0, "canonical_cutoff: need gap > 4 so that delta < 1/2");
  AdmissibleCutoff c;
  c.delta = 2.0 / gap;
  c.gap = gap;
  c.plateau_frac = 1.0 / 8.0;
  c.chi = [gap](double mu, double lambda) {
    return para_kernel(gap, mu, lambda) +
           phi_window(lambda) * phi_window(gap * mu);
  };
  verify_cutoff(c, "canonical_cutoff");
  return c;
}

Symbol regularize(const Symbol& a, const AdmissibleCutoff& chi) {
  Symbol out = a;
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j) {
    const double lambda = xi_norm(two_j);
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
      const double factor = chi(xi_norm(two_eta), lambda);
      for (auto& m : out.tensor(two_j, two_eta)) m *= factor;
    }
  }
  return out;
}

double spectral_condition_residual(const Symbol& a, double delta) {
  double total = 0.0, offending = 0.0;
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j) {
    const double cap = delta * xi_bracket(two_j);
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
      double mass = 0.0;
      for (const auto& m : a.tensor(two_j, two_eta)) mass += m.squaredNorm();
      mass *= dim_of(two_eta);
      total += mass;
      if (xi_norm(two_eta) > cap) offending += mass;
    }
  }
  return total > 0 ? std::sqrt(offending / total) : 0.0;
}

bool spectral_condition_check(const Symbol& a, double delta, double tol) {
  return spectral_condition_residual(a, delta) <= tol;
}

SpectralConditionReport spectral_condition_report(const Symbol& a,
                                                  double delta, double tol) {
  SpectralConditionReport rep;
  double total = 0.0;
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j)
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
      double mass = 0.0;
      for (const auto& m : a.tensor(two_j, two_eta)) mass += m.squaredNorm();
      total += mass * dim_of(two_eta);
    }
  double offending = 0.0;
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j) {
    const double cap = delta * xi_bracket(two_j);
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
      if (xi_norm(two_eta) <= cap) continue;
      double mass = 0.0;
      for (const auto& m : a.tensor(two_j, two_eta)) mass += m.squaredNorm();
      mass *= dim_of(two_eta);
      offending += mass;
      if (mass > tol * tol * std::max(total, 1e-300))
        rep.offending.emplace_back(two_eta, two_j);
    }
  }
  rep.residual = total > 0 ? std::sqrt(offending / total) : 0.0;
  rep.pass = rep.residual <= tol;
  return rep;
}

// ---- paraproduct kernels -----------------------------------------------------

double para_kernel(double gap, double mu, double lambda) {
  const double lo = std::max(1.0, lambda), hi = 2.0 * lambda;
  if (hi <= lo) return 0.0;
  const LogLattice lat = log_lattice(lo, hi, 24, 10);
  double acc = 0.0;
  for (size_t k = 0; k < lat.t.size(); ++k)
    acc += lat.w[k] * phi_window(gap * mu / lat.t[k]) *
           psi_window(lambda / lat.t[k]);
  return acc;
}

double para_kernel_low(double lambda) { return 1.0 - phi_window(lambda); }

ParaWeights::ParaWeights(double gap, int two_band_coeff, int two_band_arg)
    : gap_(gap) {
  require(gap > 1.0, "ParaWeights: gap must exceed 1");
  k_.resize(two_band_coeff + 1, two_band_arg + 1);
  kt_.resize(two_band_coeff + 1, two_band_arg + 1);
  for (int two_eta = 0; two_eta <= two_band_coeff; ++two_eta) {
    const double mu = xi_norm(two_eta);
    for (int two_j = 0; two_j <= two_band_arg; ++two_j) {
      const double lambda = xi_norm(two_j);
      k_(two_eta, two_j) = para_kernel(gap, mu, lambda);
      kt_(two_eta, two_j) = para_kernel(gap, lambda, mu);
    }
  }
}

double ParaWeights::coeff_weight(int two_eta, int two_j) const {
  return k_(two_eta, two_j);
}

double ParaWeights::swap_weight(int two_eta, int two_j) const {
  return kt_(two_eta, two_j);
}

double ParaWeights::remainder_weight(int two_eta, int two_j) const {
  return 1.0 - k_(two_eta, two_j) - kt_(two_eta, two_j);
}

// ---- paraproducts ------------------------------------------------------------

SpectralFunction paraproduct(const SpectralFunction& a,
                             const SpectralFunction& u, double gap,
                             int out_band) {
  const int full = a.two_band + u.two_band;
  const int eff = std::min(out_band, full);
  auto grid = haar_grid(full + eff);
  const int n = grid->node_count();
  const auto ab = block_values(a, grid);
  const auto ub = block_values(u, grid);
  VectorXcd acc = VectorXcd::Zero(n);
  std::vector<double> wrow(u.two_band + 1);
  for (int two_eta = 0; two_eta <= a.two_band; ++two_eta) {
    if (a.block(two_eta).isZero(0)) continue;
    const double mu = xi_norm(two_eta);
    bool any = false;
    for (int two_j = 0; two_j <= u.two_band; ++two_j) {
      wrow[two_j] = para_kernel(gap, mu, xi_norm(two_j));
      any = any || wrow[two_j] != 0.0;
    }
    if (!any) continue;
    acc += ab[two_eta].cwiseProduct(weighted_sum(ub, wrow, n));
  }
  GridFunction gf{grid, std::move(acc)};
  return truncated(forward_transform(gf, eff), out_band);
}

SpectralFunction paraproduct_lattice(const SpectralFunction& a,
                                     const SpectralFunction& u, double gap,
                                     int out_band, const LogLattice& lat) {
  const int full = a.two_band + u.two_band;
  const int eff = std::min(out_band, full);
  auto grid = haar_grid(full + eff);
  const int n = grid->node_count();
  const auto ab = block_values(a, grid);
  const auto ub = block_values(u, grid);
  VectorXcd acc = VectorXcd::Zero(n);
  std::vector<double> wa(a.two_band + 1), wu(u.two_band + 1);
  for (size_t k = 0; k < lat.t.size(); ++k) {
    const double t = lat.t[k];
    bool any = false;
    for (int two_j = 0; two_j <= u.two_band; ++two_j) {
      wu[two_j] = psi_window(xi_norm(two_j) / t);
      any = any || wu[two_j] != 0.0;
    }
    if (!any) continue;
    for (int two_eta = 0; two_eta <= a.two_band; ++two_eta)
      wa[two_eta] = phi_window(gap * xi_norm(two_eta) / t);
    acc += lat.w[k] *
           weighted_sum(ab, wa, n).cwiseProduct(weighted_sum(ub, wu, n));
  }
  GridFunction gf{grid, std::move(acc)};
  return truncated(forward_transform(gf, eff), out_band);
}

Symbol paraproduct_symbol(const SpectralFunction& a, int two_xi_band,
                          const ParaWeights& weights) {
  Symbol s(two_xi_band, a.two_band);
  for (int two_j = 0; two_j <= two_xi_band; ++two_j) {
    const int d = dim_of(two_j);
    for (int two_eta = 0; two_eta <= a.two_band; ++two_eta) {
      const int de = dim_of(two_eta);
      const double w = weights.coeff_weight(two_eta, two_j);
      auto& t = s.tensor(two_j, two_eta);
      const MatrixXcd& ac = a.block(two_eta);
      for (int p = 0; p < de; ++p)
        for (int q = 0; q < de; ++q)
          t[size_t(p) * de + q] = (w * ac(p, q)) * MatrixXcd::Identity(d, d);
    }
  }
  return s;
}

OpPtr para_operator(const SpectralFunction& a, double gap, int in_band,
                    int out_band) {
  return make_para_operator(a, gap, in_band, out_band, ParaKind::coeff);
}

OpPtr para_swap_operator(const SpectralFunction& a, double gap, int in_band,
                         int out_band) {
  return make_para_operator(a, gap, in_band, out_band, ParaKind::swap);
}

OpPtr para_remainder_operator(const SpectralFunction& a, double gap,
                              int in_band, int out_band) {
  return make_para_operator(a, gap, in_band, out_band, ParaKind::remainder);
}

ParaDecomposition para_decompose(const SpectralFunction& a,
                                 const SpectralFunction& u, double gap) {
  const int full = a.two_band + u.two_band;
  auto grid = haar_grid(2 * full);
  const int n = grid->node_count();
  const auto ab = block_values(a, grid);
  const auto ub = block_values(u, grid);
  const ParaWeights weights(gap, a.two_band, u.two_band);

  VectorXcd acc_au = VectorXcd::Zero(n), acc_ua = VectorXcd::Zero(n),
            acc_r = VectorXcd::Zero(n);
  std::vector<double> w_au(u.two_band + 1), w_ua(u.two_band + 1),
      w_r(u.two_band + 1);
  for (int two_eta = 0; two_eta <= a.two_band; ++two_eta) {
    for (int two_j = 0; two_j <= u.two_band; ++two_j) {
      w_au[two_j] = weights.coeff_weight(two_eta, two_j);
      w_ua[two_j] = weights.swap_weight(two_eta, two_j);
      w_r[two_j] = weights.remainder_weight(two_eta, two_j);
    }
    acc_au += ab[two_eta].cwiseProduct(weighted_sum(ub, w_au, n));
    acc_ua += ab[two_eta].cwiseProduct(weighted_sum(ub, w_ua, n));
    acc_r += ab[two_eta].cwiseProduct(weighted_sum(ub, w_r, n));
  }

  VectorXcd full_vals;
  {
    VectorXcd av = VectorXcd::Zero(n), uv = VectorXcd::Zero(n);
    for (const auto& b : ab) av += b;
    for (const auto& b : ub) uv += b;
    full_vals = av.cwiseProduct(uv);
  }

  ParaDecomposition dec;
  const VectorXcd defect = full_vals - acc_au - acc_ua - acc_r;
  GridFunction gau{grid, std::move(acc_au)};
  GridFunction gua{grid, std::move(acc_ua)};
  GridFunction gr{grid, std::move(acc_r)};
  dec.t_au = forward_transform(gau, full);
  dec.t_ua = forward_transform(gua, full);
  dec.remainder = forward_transform(gr, full);
  double num = 0.0, den = 0.0;
  for (int ia = 0; ia < grid->n_alpha(); ++ia)
    for (int ib = 0; ib < grid->n_beta(); ++ib) {
      const double w = grid->node_weight(ib);
      for (int ig = 0; ig < grid->n_gamma(); ++ig) {
        const long idx = grid->node_index(ia, ib, ig);
        num += w * std::norm(defect(idx));
        den += w * std::norm(full_vals(idx));
      }
    }
  dec.reconstruction_residual = den > 0 ? std::sqrt(num / den) : std::sqrt(num);
  return dec;
}

// ---- Bony linearization -------------------------------------------------------

BonyResult bony_linearize(const std::vector<double>& coeffs,
                          const SpectralFunction& u) {
  require(!coeffs.empty(), "bony_linearize: empty polynomial");
  const int deg = int(coeffs.size()) - 1;
  const int utb = u.two_band;
  const int xl_band = std::max(0, deg - 1) * utb;
  const int grid_band = std::max(utb, 2 * xl_band);
  auto grid = haar_grid(grid_band);
  const int n = grid->node_count();
  const auto ub = block_values(u, grid);

  VectorXcd u_full = VectorXcd::Zero(n);
  for (const auto& b : ub) u_full += b;
  std::vector<double> w1(utb + 1);
  for (int two_j = 0; two_j <= utb; ++two_j)
    w1[two_j] = phi_window(xi_norm(two_j));
  const VectorXcd u1 = weighted_sum(ub, w1, n);

  auto poly_at = [&](const VectorXcd& z) {
    VectorXcd acc = VectorXcd::Constant(n, coeffs.back());
    for (int k = deg - 1; k >= 0; --k)
      acc = acc.cwiseProduct(z) + VectorXcd::Constant(n, coeffs[k]);
    return acc;
  };
  const VectorXcd f_u = poly_at(u_full);
  const VectorXcd f_u1 = poly_at(u1);

  // l_j(x) = sum_k k c_k sum_{m-tuples} K(j; m) prod_i u_{m_i}(x), where
  // K(j; m) = int psi(lam_j/t) prod_i phi(lam_{m_i}/t) dt/t over t >= 1.
  std::vector<double> lam(utb + 1);
  for (int two_j = 0; two_j <= utb; ++two_j) lam[two_j] = xi_norm(two_j);
  std::vector<VectorXcd> lvals(utb + 1, VectorXcd::Zero(n));
  std::vector<int> tuple;
  std::vector<double> K(utb + 1);
  auto kernel_all = [&]() {
    for (int two_j = 0; two_j <= utb; ++two_j) {
      const double lj = lam[two_j];
      const double lo = std::max(1.0, lj), hi = 2.0 * lj;
      if (hi <= lo) {
        K[two_j] = 0.0;
        continue;
      }
      const LogLattice lat = log_lattice(lo, hi, 24, 10);
      double acc = 0.0;
      for (size_t q = 0; q < lat.t.size(); ++q) {
        double val = psi_window(lj / lat.t[q]);
        if (val == 0.0) continue;
        for (int m : tuple) val *= phi_window(lam[m] / lat.t[q]);
        acc += lat.w[q] * val;
      }
      K[two_j] = acc;
    }
  };
  std::function<void(int, int, const VectorXcd&)> walk =
      [&](int k, int depth, const VectorXcd& prefix) {
        if (depth == k - 1) {
          kernel_all();
          const double fac = double(k) * coeffs[k];
          for (int two_j = 0; two_j <= utb; ++two_j)
            if (K[two_j] != 0.0) lvals[two_j] += (fac * K[two_j]) * prefix;
          return;
        }
        for (int m = 0; m <= utb; ++m) {
          tuple.push_back(m);
          walk(k, depth + 1, prefix.cwiseProduct(ub[m]));
          tuple.pop_back();
        }
      };
  for (int k = 1; k <= deg; ++k) {
    if (coeffs[k] == 0.0) continue;
    tuple.clear();
    walk(k, 0, VectorXcd::Ones(n));
  }

  BonyResult res;
  res.l_u = Symbol(utb, xl_band);
  for (int two_j = 0; two_j <= utb; ++two_j) {
    VectorXcd tmp = lvals[two_j];
    GridFunction g{grid, std::move(tmp)};
    SpectralFunction lj = forward_transform(g, xl_band);
    const int d = dim_of(two_j);
    for (int two_eta = 0; two_eta <= xl_band; ++two_eta) {
      const int de = dim_of(two_eta);
      for (int p = 0; p < de; ++p)
        for (int q = 0; q < de; ++q)
          res.l_u.tensor(two_j, two_eta)[size_t(p) * de + q] =
              lj.block(two_eta)(p, q) * MatrixXcd::Identity(d, d);
    }
  }

  OpPtr op = quantized_operator(res.l_u, utb, utb + xl_band);
  res.op_applied = op->apply(u);
  const GridFunction ov = inverse_transform(res.op_applied, grid);
  res.residual_sup = (f_u - f_u1 - ov.values).cwiseAbs().maxCoeff();
  return res;
}

// ---- symbolic calculus --------------------------------------------------------

Symbol compose_sharp(const Symbol& a, const Symbol& b,
                     const TaylorOperators& ops, int r, int out_x_cap) {
  require(ops.order >= r + 1, "compose_sharp: Taylor order too low for r");
  require(ops.inverse_argument,
          "compose_sharp: needs inverse-argument Taylor operators");
  const int xi_out = std::min(a.xi_band(), b.xi_band());
  const int x_out = (out_x_cap >= 0)
                        ? std::min(out_x_cap, a.x_band() + b.x_band())
                        : a.x_band() + b.x_band();
  Symbol out(xi_out, x_out);
  for (int ai = 0; ai < int(ops.alphas.size()); ++ai) {
    const auto& alpha = ops.alphas[ai];
    if (alpha[0] + alpha[1] + alpha[2] > r) continue;
    const Symbol da = difference_power(a, alpha);
    const Symbol xb = apply_taylor_op_x(ops, ai, b);
    const Symbol term = (da.x_band() > 0 && xb.x_band() > 0)
                            ? symbol_product_spectral(da, xb, x_out)
                            : symbol_product(da, xb);
    for (int two_j = 0; two_j <= xi_out; ++two_j)
      for (int two_eta = 0; two_eta <= std::min(x_out, term.x_band());
           ++two_eta) {
        auto& dst = out.tensor(two_j, two_eta);
        const auto& src = term.tensor(two_j, two_eta);
        for (size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
      }
  }
  return out;
}

Symbol adjoint_sharp(const Symbol& a, const TaylorOperators& ops, int r) {
  require(ops.order >= r + 1, "adjoint_sharp: Taylor order too low for r");
  require(ops.inverse_argument,
          "adjoint_sharp: needs inverse-argument Taylor operators");
  const Symbol astar = symbol_adjoint(a);
  Symbol out(a.xi_band(), a.x_band());
  for (int ai = 0; ai < int(ops.alphas.size()); ++ai) {
    const auto& alpha = ops.alphas[ai];
    if (alpha[0] + alpha[1] + alpha[2] > r) continue;
    const Symbol term =
        difference_power(apply_taylor_op_x(ops, ai, astar), alpha);
    for (int two_j = 0; two_j <= a.xi_band(); ++two_j)
      for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
        auto& dst = out.tensor(two_j, two_eta);
        const auto& src = term.tensor(two_j, two_eta);
        for (size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
      }
  }
  return out;
}

}  // namespace su2para
