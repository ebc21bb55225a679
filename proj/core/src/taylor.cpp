#include "su2para/taylor.hpp"

#include <cmath>

#include "su2para/irreps.hpp"

namespace su2para {

namespace {

std::vector<std::array<int, 3>> multi_indices_up_to(int max_total) {
  std::vector<std::array<int, 3>> out;
  for (int total = 0; total <= max_total; ++total)
    for (int a1 = total; a1 >= 0; --a1)
      for (int a2 = total - a1; a2 >= 0; --a2)
        out.push_back({a1, a2, total - a1 - a2});
  return out;
}

// q^alpha as a band-limited function (pointwise products of tuple entries);
// with inverse_argument, the tuple components of y -> q(y^{-1}) instead:
// q~_00 = q_11, q~_01 = -q_01, q~_10 = -q_10.
SpectralFunction tuple_power_function(const std::array<int, 3>& alpha,
                                      bool inverse_argument) {
  const auto tuple = fundamental_tuple();
  SpectralFunction acc = SpectralFunction::zero(0);
  acc.block(0)(0, 0) = 1.0;  // constant 1
  for (int comp = 0; comp < 3; ++comp) {
    auto [r, c] = FundamentalTuple::coordinates[comp];
    double sign = 1.0;
    if (inverse_argument) {
      if (r == c) { r = 1 - r; c = 1 - c; } else { sign = -1.0; }
    }
    const SpectralFunction q = scaled(sign, tuple.q[r * 2 + c]);
    for (int rep = 0; rep < alpha[comp]; ++rep)
      acc = product(acc, q, acc.two_band + q.two_band).fn;
  }
  return acc;
}

}  // namespace

constexpr std::array<std::pair<int, int>, 3> FundamentalTuple::coordinates;

FundamentalTuple fundamental_tuple() {
  FundamentalTuple tup;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      SpectralFunction q = SpectralFunction::zero(1);
      // hat{tau_rc}(1)(u, v) = delta_{u c} delta_{v r} / 2
      q.block(1)(c, r) = 0.5;
      if (r == c) q.block(0)(0, 0) = -1.0;
      tup.q[r * 2 + c] = std::move(q);
    }
  return tup;
}

cplx tuple_value(int r, int c, const GroupPoint& y) {
  return y.matrix()(r, c) - (r == c ? 1.0 : 0.0);
}

cplx tuple_power(const std::array<int, 3>& alpha, const GroupPoint& y) {
  cplx acc(1, 0);
  for (int comp = 0; comp < 3; ++comp) {
    const auto [r, c] = FundamentalTuple::coordinates[comp];
    const cplx v = tuple_value(r, c, y);
    for (int rep = 0; rep < alpha[comp]; ++rep) acc *= v;
  }
  return acc;
}

double leibniz_residual(
    const std::vector<std::pair<GroupPoint, GroupPoint>>& pairs) {
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const GroupPoint xy = multiply(x, y);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cplx rhs = tuple_value(i, j, x) + tuple_value(i, j, y);
        for (int k = 0; k < 2; ++k)
          rhs += tuple_value(i, k, x) * tuple_value(k, j, y);
        worst = std::max(worst, std::abs(tuple_value(i, j, xy) - rhs));
      }
  }
  return worst;
}

TaylorOperators taylor_operators(int order, bool inverse_argument) {
  require(order >= 1, "taylor_operators: order must be >= 1");
  TaylorOperators ops;
  ops.order = order;
  ops.inverse_argument = inverse_argument;
  ops.alphas = multi_indices_up_to(order - 1);
  ops.betas = ops.alphas;  // same index set; the moment matrix is square
  const int n = int(ops.alphas.size());

  // moments(alpha_idx, beta_idx) = [X^beta q^alpha](e)
  MatrixXcd moments(n, n);
  const GroupPoint e = identity_point();
  for (int ai = 0; ai < n; ++ai) {
    const SpectralFunction qa =
        tuple_power_function(ops.alphas[ai], inverse_argument);
    for (int bi = 0; bi < n; ++bi)
      moments(ai, bi) = evaluate(apply_monomial(ops.betas[bi], qa), e);
  }

  Eigen::JacobiSVD<MatrixXcd> svd(moments,
                                  Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  require(sv(n - 1) > 1e-10 * sv(0),
          "taylor_operators: moment matrix numerically singular");
  ops.moment_condition = sv(0) / sv(n - 1);

  // columns c^alpha with  moments * c^alpha = e_alpha; store rows.
  MatrixXcd inv = svd.solve(MatrixXcd::Identity(n, n));
  ops.coeff = inv.transpose();
  ops.biorth_residual =
      (moments * ops.coeff.transpose() - MatrixXcd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  return ops;
}

SpectralFunction apply_monomial(const std::array<int, 3>& beta,
                                const SpectralFunction& f) {
  const auto basis = lie_algebra_basis();
  SpectralFunction out = f;
  for (int two_j = 0; two_j <= f.two_band; ++two_j) {
    if (out.block(two_j).size() == 0) continue;
    MatrixXcd lhs = MatrixXcd::Identity(dim_of(two_j), dim_of(two_j));
    // operator E1^{b1} E2^{b2} E3^{b3}: spectral side multiplies in order
    for (int comp = 0; comp < 3; ++comp) {
      const MatrixXcd gen = drep(two_j, basis.E[comp]);
      for (int rep = 0; rep < beta[comp]; ++rep) lhs = lhs * gen;
    }
    out.block(two_j) = lhs * out.block(two_j);
  }
  return out;
}

SpectralFunction apply_taylor_op(const TaylorOperators& ops, int alpha_idx,
                                 const SpectralFunction& f) {
  SpectralFunction out = SpectralFunction::zero(f.two_band);
  for (int bi = 0; bi < int(ops.betas.size()); ++bi) {
    const cplx c = ops.coeff(alpha_idx, bi);
    if (c == cplx(0, 0)) continue;
    out = add(out, scaled(c, apply_monomial(ops.betas[bi], f)));
  }
  return out;
}

Symbol apply_taylor_op_x(const TaylorOperators& ops, int alpha_idx,
                         const Symbol& a) {
  const auto basis = lie_algebra_basis();
  Symbol out(a.xi_band(), a.x_band());
  for (int bi = 0; bi < int(ops.betas.size()); ++bi) {
    const cplx c = ops.coeff(alpha_idx, bi);
    if (c == cplx(0, 0)) continue;
    Symbol term = a;
    const auto& beta = ops.betas[bi];
    for (int comp = 2; comp >= 0; --comp)
      for (int rep = 0; rep < beta[comp]; ++rep)
        term = x_derivative(term, basis.E[comp]);
    for (int two_j = 0; two_j <= a.xi_band(); ++two_j)
      for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
        auto& dst = out.tensor(two_j, two_eta);
        const auto& src = term.tensor(two_j, two_eta);
        for (size_t k = 0; k < src.size(); ++k) dst[k] += c * src[k];
      }
  }
  return out;
}

cplx taylor_remainder(const TaylorOperators& ops, const SpectralFunction& f,
                      const GroupPoint& y) {
  const GroupPoint e = identity_point();
  const GroupPoint arg = ops.inverse_argument ? inverse(y) : y;
  cplx acc = evaluate(f, y);
  for (int ai = 0; ai < int(ops.alphas.size()); ++ai)
    acc -= tuple_power(ops.alphas[ai], arg) *
           evaluate(apply_taylor_op(ops, ai, f), e);
  return acc;
}

}  // namespace su2para
