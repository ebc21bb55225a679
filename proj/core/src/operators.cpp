#include "su2para/operators.hpp"

#include <cmath>
#include <random>

#include "su2para/clebsch.hpp"

namespace su2para {

namespace {

class QuantizedOperator final : public SpectralOperator {
 public:
  QuantizedOperator(Symbol a, int in_band, int out_band)
      : a_(std::move(a)), in_(in_band), out_(out_band) {
    require(in_ >= 0 && out_ >= 0, "quantized_operator: negative band");
  }

  int in_band() const override { return in_; }
  int out_band() const override { return out_; }

  SpectralFunction apply(const SpectralFunction& f) const override {
    require(f.two_band <= in_, "quantized_operator: input exceeds band");
    SpectralFunction g = SpectralFunction::zero(out_);
    const int xi_max = std::min(f.two_band, a_.xi_band());
    for (int two_xi = 0; two_xi <= xi_max; ++two_xi) {
      const MatrixXcd& fc = f.block(two_xi);
      if (fc.size() == 0 || fc.isZero(0)) continue;
      const int dxi = dim_of(two_xi);
      for (int two_eta = 0; two_eta <= a_.x_band(); ++two_eta) {
        const int de = dim_of(two_eta);
        const auto& t = a_.tensor(two_xi, two_eta);
        // P_{ab} = T_{ab} * hat{f}(xi)
        std::vector<MatrixXcd> p(t.size());
        bool nonzero = false;
        for (size_t k = 0; k < t.size(); ++k) {
          if (t[k].isZero(0)) continue;
          p[k].noalias() = t[k] * fc;
          nonzero = true;
        }
        if (!nonzero) continue;
        const double pref = double(dxi) * double(de);
        for (int two_zeta = std::abs(two_xi - two_eta);
             two_zeta <= two_xi + two_eta && two_zeta <= out_; two_zeta += 2) {
          const int dz = dim_of(two_zeta);
          const MatrixXd& u = cg_matrix(two_eta, two_xi, two_zeta);
          MatrixXcd& out_block = g.block(two_zeta);
          const double scale = pref / double(dz);
          for (int a = 0; a < de; ++a) {
            const auto ua = u.middleRows(a * dxi, dxi);  // (w, p)
            for (int b = 0; b < de; ++b) {
              const MatrixXcd& pab = p[size_t(a) * de + b];
              if (pab.size() == 0) continue;
              const auto ub = u.middleRows(b * dxi, dxi);  // (u, q)
              out_block.noalias() +=
                  scale * (ua.transpose() * (pab * ub));
            }
          }
        }
      }
    }
    return g;
  }

  SpectralFunction apply_adjoint(const SpectralFunction& h) const override {
    require(h.two_band <= out_, "quantized_operator: adjoint input band");
    SpectralFunction g = SpectralFunction::zero(in_);
    const int xi_max = std::min(in_, a_.xi_band());
    for (int two_xi = 0; two_xi <= xi_max; ++two_xi) {
      const int dxi = dim_of(two_xi);
      MatrixXcd& out_block = g.block(two_xi);
      for (int two_eta = 0; two_eta <= a_.x_band(); ++two_eta) {
        const int de = dim_of(two_eta);
        const auto& t = a_.tensor(two_xi, two_eta);
        for (int two_zeta = std::abs(two_xi - two_eta);
             two_zeta <= two_xi + two_eta && two_zeta <= h.two_band;
             two_zeta += 2) {
          const MatrixXcd& hc = h.block(two_zeta);
          if (hc.size() == 0 || hc.isZero(0)) continue;
          const MatrixXd& u = cg_matrix(two_eta, two_xi, two_zeta);
          for (int a = 0; a < de; ++a) {
            const auto ua = u.middleRows(a * dxi, dxi);
            for (int b = 0; b < de; ++b) {
              const MatrixXcd& tab = t[size_t(a) * de + b];
              if (tab.isZero(0)) continue;
              const auto ub = u.middleRows(b * dxi, dxi);
              // R_{ab}(w, u) = [Ua H Ub^T](w, u)
              MatrixXcd r = ua * hc * ub.transpose();
              out_block.noalias() += double(de) * (tab.adjoint() * r);
            }
          }
        }
      }
    }
    return g;
  }

 private:
  Symbol a_;
  int in_, out_;
};

class MultiplierOperator final : public SpectralOperator {
 public:
  MultiplierOperator(std::function<double(double)> h, int band)
      : h_(std::move(h)), band_(band) {}
  int in_band() const override { return band_; }
  int out_band() const override { return band_; }
  SpectralFunction apply(const SpectralFunction& f) const override {
    SpectralFunction g = truncated(f, band_);
    for (int two_j = 0; two_j <= band_; ++two_j)
      g.block(two_j) *= h_(xi_norm(two_j));
    return g;
  }
  SpectralFunction apply_adjoint(const SpectralFunction& f) const override {
    return apply(f);  // real radial multipliers are self-adjoint
  }

 private:
  std::function<double(double)> h_;
  int band_;
};

class MultiplicationOperator final : public SpectralOperator {
 public:
  MultiplicationOperator(const SpectralFunction& c, int in_band, int out_band)
      : c_(c), cbar_(SpectralFunction::zero(c.two_band)), in_(in_band),
        out_(out_band) {
    // conjugate function, for the adjoint: multiplication by conj(c)
    for (int two_j = 0; two_j <= c.two_band; ++two_j) {
      const MatrixXd eps = conjugation_intertwiner(two_j);
      cbar_.block(two_j) =
          eps.transpose() * c.block(two_j).conjugate() * eps;
    }
  }
  int in_band() const override { return in_; }
  int out_band() const override { return out_; }
  SpectralFunction apply(const SpectralFunction& f) const override {
    return product(c_, truncated(f, in_), out_).fn;
  }
  SpectralFunction apply_adjoint(const SpectralFunction& g) const override {
    return product(cbar_, truncated(g, out_), in_).fn;
  }

 private:
  SpectralFunction c_, cbar_;
  int in_, out_;
};

class ComposedOperator final : public SpectralOperator {
 public:
  ComposedOperator(OpPtr outer, OpPtr inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {}
  int in_band() const override { return inner_->in_band(); }
  int out_band() const override { return outer_->out_band(); }
  SpectralFunction apply(const SpectralFunction& f) const override {
    return outer_->apply(truncated(inner_->apply(f), outer_->in_band()));
  }
  SpectralFunction apply_adjoint(const SpectralFunction& g) const override {
    return inner_->apply_adjoint(
        truncated(outer_->apply_adjoint(g), inner_->out_band()));
  }

 private:
  OpPtr outer_, inner_;
};

class LincombOperator final : public SpectralOperator {
 public:
  LincombOperator(cplx ca, OpPtr a, cplx cb, OpPtr b)
      : ca_(ca), cb_(cb), a_(std::move(a)), b_(std::move(b)) {}
  int in_band() const override {
    return std::min(a_->in_band(), b_->in_band());
  }
  int out_band() const override {
    return std::max(a_->out_band(), b_->out_band());
  }
  SpectralFunction apply(const SpectralFunction& f) const override {
    SpectralFunction fa = scaled(ca_, a_->apply(truncated(f, a_->in_band())));
    SpectralFunction fb = scaled(cb_, b_->apply(truncated(f, b_->in_band())));
    return add(truncated(fa, out_band()), truncated(fb, out_band()));
  }
  SpectralFunction apply_adjoint(const SpectralFunction& g) const override {
    SpectralFunction ga = scaled(
        std::conj(ca_), a_->apply_adjoint(truncated(g, a_->out_band())));
    SpectralFunction gb = scaled(
        std::conj(cb_), b_->apply_adjoint(truncated(g, b_->out_band())));
    return add(truncated(ga, in_band()), truncated(gb, in_band()));
  }

 private:
  cplx ca_, cb_;
  OpPtr a_, b_;
};

class AdjointOperator final : public SpectralOperator {
 public:
  explicit AdjointOperator(OpPtr a) : a_(std::move(a)) {}
  int in_band() const override { return a_->out_band(); }
  int out_band() const override { return a_->in_band(); }
  SpectralFunction apply(const SpectralFunction& f) const override {
    return a_->apply_adjoint(f);
  }
  SpectralFunction apply_adjoint(const SpectralFunction& g) const override {
    return a_->apply(g);
  }

 private:
  OpPtr a_;
};

class ShellProjection final : public SpectralOperator {
 public:
  ShellProjection(int band, int two_lo, int two_hi)
      : band_(band), lo_(two_lo), hi_(two_hi) {}
  int in_band() const override { return band_; }
  int out_band() const override { return band_; }
  SpectralFunction apply(const SpectralFunction& f) const override {
    SpectralFunction g = truncated(f, band_);
    for (int two_j = 0; two_j <= band_; ++two_j)
      if (two_j < lo_ || two_j > hi_) g.block(two_j).setZero();
    return g;
  }
  SpectralFunction apply_adjoint(const SpectralFunction& f) const override {
    return apply(f);
  }

 private:
  int band_, lo_, hi_;
};

SpectralFunction sobolev_scale(const SpectralFunction& f, double s) {
  SpectralFunction g = f;
  for (int two_j = 0; two_j <= f.two_band; ++two_j)
    g.block(two_j) *= std::pow(xi_bracket(two_j), s);
  return g;
}

}  // namespace

OpPtr quantized_operator(Symbol a, int in_band, int out_band) {
  return std::make_shared<QuantizedOperator>(std::move(a), in_band, out_band);
}

OpPtr multiplier_operator(const std::function<double(double)>& h, int band) {
  return std::make_shared<MultiplierOperator>(h, band);
}

OpPtr multiplication_operator(const SpectralFunction& c, int in_band,
                              int out_band) {
  return std::make_shared<MultiplicationOperator>(c, in_band, out_band);
}

OpPtr compose_ops(OpPtr outer, OpPtr inner) {
  return std::make_shared<ComposedOperator>(std::move(outer), std::move(inner));
}

OpPtr lincomb_ops(cplx ca, OpPtr a, cplx cb, OpPtr b) {
  return std::make_shared<LincombOperator>(ca, std::move(a), cb, std::move(b));
}

OpPtr adjoint_operator(OpPtr a) {
  return std::make_shared<AdjointOperator>(std::move(a));
}

OpPtr shell_projection(int band, int two_lo, int two_hi) {
  return std::make_shared<ShellProjection>(band, two_lo, two_hi);
}

NormEstimate operator_norm(const SpectralOperator& op, double s_in,
                           double s_out, int shell_two_lo, uint64_t seed,
                           int max_iter, double rel_tol) {
  const int in_band = op.in_band();
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SpectralFunction v = SpectralFunction::zero(in_band);
  for (int two_j = shell_two_lo; two_j <= in_band; ++two_j) {
    const int d = dim_of(two_j);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        v.block(two_j)(r, c) = cplx(gauss(eng), gauss(eng));
  }
  double nv = plancherel_norm(v);
  require(nv > 0, "operator_norm: empty input shell");
  v = scaled(1.0 / nv, v);

  // power iteration on  P W_in^{-1} A^* W_out^2 A W_in^{-1} P
  auto step = [&](const SpectralFunction& x) {
    SpectralFunction y = sobolev_scale(x, -s_in);
    y = op.apply(y);
    y = sobolev_scale(y, 2.0 * s_out);
    y = op.apply_adjoint(y);
    y = sobolev_scale(truncated(y, in_band), -s_in);
    for (int two_j = 0; two_j < shell_two_lo; ++two_j) y.block(two_j).setZero();
    return y;
  };

  NormEstimate est;
  double prev = 0.0;
  int stable = 0;
  for (int it = 1; it <= max_iter; ++it) {
    SpectralFunction w = step(v);
    double rayleigh = 0.0;  // <w, v> is real for a normal operator's iterate
    for (int two_j = 0; two_j <= in_band; ++two_j)
      rayleigh += dim_of(two_j) *
                  (w.block(two_j).conjugate().cwiseProduct(v.block(two_j)))
                      .sum()
                      .real();
    const double nw = plancherel_norm(w);
    est.iterations = it;
    if (nw == 0.0) {
      est.norm = 0.0;
      est.converged = true;
      return est;
    }
    v = scaled(1.0 / nw, w);
    const double sigma = std::sqrt(std::max(rayleigh, 0.0));
    if (std::abs(sigma - prev) <= rel_tol * std::max(sigma, 1e-300))
      ++stable;
    else
      stable = 0;
    prev = sigma;
    est.norm = sigma;
    if (stable >= 3) {
      est.converged = true;
      return est;
    }
  }
  return est;
}

MatrixXcd dense_matrix(const SpectralOperator& op, double s_in, double s_out) {
  const int in_band = op.in_band(), out_band = op.out_band();
  auto dof = [](int band) {
    int n = 0;
    for (int two_j = 0; two_j <= band; ++two_j) n += dim_of(two_j) * dim_of(two_j);
    return n;
  };
  const int ncols = dof(in_band), nrows = dof(out_band);
  MatrixXcd m(nrows, ncols);
  int col = 0;
  for (int two_j = 0; two_j <= in_band; ++two_j) {
    const int d = dim_of(two_j);
    // single-entry block beta has H^s norm sqrt(d) <xi>^s |beta|
    const double win = std::pow(xi_bracket(two_j), -s_in) / std::sqrt(double(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        SpectralFunction basis = SpectralFunction::zero(in_band);
        basis.block(two_j)(r, c) = win;
        SpectralFunction image = op.apply(basis);
        int row = 0;
        for (int two_z = 0; two_z <= out_band; ++two_z) {
          const int dz = dim_of(two_z);
          const double wout =
              std::sqrt(double(dz)) * std::pow(xi_bracket(two_z), s_out);
          for (int p = 0; p < dz; ++p)
            for (int q = 0; q < dz; ++q)
              m(row++, col) = wout * image.block(two_z)(p, q);
        }
        ++col;
      }
  }
  return m;
}

}  // namespace su2para
