#include "su2para/probes.hpp"

#include <cmath>

#include "su2para/irreps.hpp"
#include "su2para/random.hpp"
#include "su2para/taylor.hpp"
#include "su2para/windows.hpp"

namespace su2para {

namespace {

// |xi|^m as a multiplier, with |xi|^0 = 1 everywhere and |xi|^m = 0 at the
// trivial degree otherwise (matching the quasi-homogeneous convention).
Symbol kappa_power(double m, int two_band) {
  if (m == 0.0)
    return multiplier_symbol([](double) { return 1.0; }, two_band);
  return multiplier_symbol(
      [m](double lam) { return lam > 0.0 ? std::pow(lam, m) : 0.0; },
      two_band);
}

Symbol sub(Symbol x, const Symbol& y) {
  Symbol ny = y;
  ny *= -1.0;
  x += ny;
  return x;
}

double rel_data_error(const Symbol& got, const Symbol& want) {
  return sub(got, want).data_norm() / want.data_norm();
}

// admissible coordinate components of the fundamental tuple
constexpr int kCompRow[3] = {0, 0, 1};
constexpr int kCompCol[3] = {0, 1, 0};

std::vector<double> max_per_degree(std::vector<double> acc,
                                   const std::vector<double>& next) {
  if (acc.empty()) return next;
  for (size_t i = 0; i < acc.size() && i < next.size(); ++i)
    acc[i] = std::max(acc[i], next[i]);
  return acc;
}

}  // namespace

// ---- multiplier decay fits ---------------------------------------------------

std::vector<DecayRow> multiplier_decay_probe(double m, double t, int two_lo,
                                             int two_hi) {
  require(t > 0.0 && two_lo < two_hi, "multiplier_decay_probe: bad window");
  const int band = two_hi + 4;  // headroom: differences shorten the valid top
  const Symbol a = multiplier_symbol(
      [m, t](double lam) {
        const double y = lam / t;
        return std::pow(1.0 + y * y, 0.5 * m);
      },
      band);

  std::vector<std::array<int, 3>> betas = {{0, 0, 0}};
  for (int i = 0; i < 3; ++i) {
    std::array<int, 3> b{0, 0, 0};
    b[i] = 1;
    betas.push_back(b);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      std::array<int, 3> b{0, 0, 0};
      ++b[i];
      ++b[j];
      betas.push_back(b);
    }

  std::vector<DecayRow> rows;
  rows.reserve(betas.size());
  for (const auto& beta : betas) {
    DecayRow row;
    row.beta = beta;
    row.expected = m - (beta[0] + beta[1] + beta[2]);
    row.slope =
        fit_decay(per_degree_sup_norms(difference_power(a, beta)), two_lo,
                  two_hi)
            .slope;
    rows.push_back(row);
  }
  return rows;
}

// ---- weight-power chain identity ----------------------------------------------

WeightChainReport weight_chain_probe(double m, int two_band, int two_lo,
                                     int two_hi) {
  require(two_band >= two_hi + 2, "weight_chain_probe: band too small");
  WeightChainReport rep;
  rep.m = m;
  rep.expected = m - 2.0;

  const Symbol km = kappa_power(m, two_band);
  const Symbol k1 = kappa_power(1.0, two_band);
  // the differences grow the degree band by one; match shapes there
  const Symbol km1 = kappa_power(m - 1.0, two_band + 1);

  std::vector<double> norms;
  double raw = 0.0;
  for (int comp = 0; comp < 3; ++comp) {
    Symbol res = difference_op(km, kCompRow[comp], kCompCol[comp]);
    Symbol corr =
        symbol_product(km1, difference_op(k1, kCompRow[comp], kCompCol[comp]));
    corr *= -m;
    res += corr;
    raw = std::max(raw, res.data_norm());
    norms = max_per_degree(std::move(norms), per_degree_sup_norms(res));
  }

  if (m == 1.0) {
    rep.exact = true;
    rep.residual_norm = raw;
  } else {
    rep.fit = fit_decay(norms, two_lo, two_hi);
  }
  return rep;
}

// ---- quasi-homogeneous functional calculus ------------------------------------

QhReport quasi_homogeneous_probe(int two_band, int two_lo, int two_hi) {
  QhReport rep;
  const auto basis = lie_algebra_basis();
  const Symbol bx = vector_field_symbol(basis.E[0], two_band);

  // f == 1 reproduces the plain weight power.
  for (double m : {1.0, -1.0}) {
    const Symbol q = quasi_homogeneous([](cplx) { return cplx(1.0, 0.0); },
                                       bx, m, 0.999);
    rep.const_rel_error =
        std::max(rep.const_rel_error, rel_data_error(q, kappa_power(m, two_band)));
  }

  // f(z) = z at order 0 reproduces b / kappa.
  {
    const Symbol q =
        quasi_homogeneous([](cplx z) { return z; }, bx, 0.0, 0.999);
    rep.linear_rel_error =
        rel_data_error(q, symbol_product(bx, kappa_power(-1.0, two_band)));
    rep.linear_slope =
        fit_decay(per_degree_sup_norms(q), two_lo, two_hi).slope;
  }

  // f(z) = 1/(1-z) with a small argument matches geometric partial sums.
  {
    Symbol bs = bx;
    bs *= 0.35;
    const Symbol q = quasi_homogeneous(
        [](cplx z) { return cplx(1.0, 0.0) / (cplx(1.0, 0.0) - z); }, bs, 0.0,
        0.5);
    const Symbol bok = symbol_product(bs, kappa_power(-1.0, two_band));
    Symbol sum = kappa_power(0.0, two_band);
    Symbol pow = sum;
    for (int k = 1; k <= 26; ++k) {
      pow = symbol_product(pow, bok);
      sum += pow;
    }
    rep.series_rel_error = sub(q, sum).data_norm() / q.data_norm();
  }

  // order drop of the commutator with a frame symbol
  {
    Symbol b1 = vector_field_symbol(basis.E[0], two_band);
    b1 *= 0.4;
    const Symbol a =
        quasi_homogeneous([](cplx z) { return std::exp(z); }, b1, 1.0, 2.0);
    const Symbol bz = vector_field_symbol(basis.E[2], two_band);
    const Symbol comm = sub(symbol_product(a, bz), symbol_product(bz, a));
    rep.commutator_slope =
        fit_decay(per_degree_sup_norms(comm), two_lo, two_hi).slope;
    rep.commutator_claim = 1.0;  // orders 1 + 1, one order drop
  }
  return rep;
}

// ---- rough vs regularized quantization -----------------------------------------

RoughQuantReport rough_quantization_probe(const std::vector<int>& two_bands,
                                          double delta, int max_iter,
                                          double rel_tol) {
  RoughQuantReport rep;
  rep.bands = two_bands;
  rep.delta = delta;
  for (int band : two_bands) {
    Symbol resonant(band, band);
    Symbol cone(band, band);
    for (int two_j = 1; two_j <= band; ++two_j) {
      const int d = dim_of(two_j);
      // unit-sup x-profile: the (0,0) entry function of the chosen degree
      auto place = [&](Symbol& s, int two_eta) {
        const int de = dim_of(two_eta);
        MatrixXcd coeff = MatrixXcd::Zero(de, de);
        coeff(0, 0) = 1.0 / de;
        for (int w = 0; w < d; ++w)
          s.set_entry_coeff(two_j, two_eta, w, w, coeff);
      };
      place(resonant, two_j);
      int two_eta = 0;
      for (int cand = 0; cand <= band; ++cand)
        if (xi_norm(cand) <= 0.5 * delta * xi_bracket(two_j)) two_eta = cand;
      place(cone, two_eta);
    }
    rep.resonant.push_back(
        operator_norm(*quantized_operator(resonant, band, band), -1.0, -1.0,
                      0, 5, max_iter, rel_tol)
            .norm);
    rep.cone.push_back(
        operator_norm(*quantized_operator(cone, band, band), -1.0, -1.0, 0, 5,
                      max_iter, rel_tol)
            .norm);
  }
  return rep;
}

// ---- paraproduct norm stability -------------------------------------------------

ParaNormReport paraproduct_norm_probe(const std::vector<double>& s_vals,
                                      const std::vector<int>& two_bands,
                                      double gap, uint64_t seed, int max_iter,
                                      double rel_tol) {
  ParaNormReport rep;
  rep.s = s_vals;
  rep.bands = two_bands;
  rep.norm_over_sup =
      MatrixXd::Zero(int(s_vals.size()), int(two_bands.size()));

  Rng rng(seed);
  const SpectralFunction a = random_zygmund_witness(rng, 8, 1.0);
  rep.coeff_sup = grid_sup(a);

  for (size_t bi = 0; bi < two_bands.size(); ++bi) {
    const int band = two_bands[bi];
    const OpPtr t = para_operator(a, gap, band, band);
    for (size_t si = 0; si < s_vals.size(); ++si)
      rep.norm_over_sup(int(si), int(bi)) =
          operator_norm(*t, s_vals[si], s_vals[si], 0, 7, max_iter, rel_tol)
              .norm /
          rep.coeff_sup;
    const OpPtr r = para_remainder_operator(a, gap, band, band);
    rep.smoothing.push_back(
        operator_norm(*r, 0.0, 1.0, 0, 7, max_iter, rel_tol).norm);
  }

  const SpectralFunction u = random_band_function(rng, 12);
  rep.recon_residual = para_decompose(a, u, gap).reconstruction_residual;
  return rep;
}

// ---- Sobolev-pairing remainder probes --------------------------------------------

PairingReport pairing_probes(const std::vector<int>& two_bands, double gap,
                             uint64_t seed, int max_iter, double rel_tol) {
  PairingReport rep;
  rep.gap = gap;
  rep.r = 1;

  Rng rng(seed);
  const SpectralFunction c1 = random_zygmund_witness(rng, 8, 1.0);
  const SpectralFunction c2 = random_zygmund_witness(rng, 8, 1.0);
  const Matrix2cd x3 = lie_algebra_basis().E[2];
  const AdmissibleCutoff chi_g = canonical_cutoff(gap);
  const AdmissibleCutoff chi_w = admissible_cutoff(2.0 / gap, gap);
  const TaylorOperators ops = taylor_operators(2, true);
  const auto bracket = [](double lam) { return std::sqrt(1.0 + lam * lam); };
  // Composition rows route the intermediate space through band + wide so no
  // coupling path is lost to truncation between the factors; wide = x-band of
  // the coefficients makes the two-step application exact.
  const int wide = c1.two_band;

  for (int band : two_bands) {
    // Operands that enter difference stencils are built with spare slots past
    // the band, so every slot the quantized operator reads has a complete
    // stencil; the operators themselves never touch the spare slots.
    const int room = band + 4;
    const OpPtr t_c2 = para_operator(c2, gap, band, band);
    const OpPtr h = multiplier_operator(bracket, band);
    const Symbol b1 = coefficient_field_symbol(c2, x3, room);
    const Symbol b1_reg = regularize(b1, chi_g);
    const OpPtr q_b1 = quantized_operator(b1_reg, band, band);

    auto add_row = [&](const std::string& name, const OpPtr& rem) {
      PairingRow row;
      row.name = name;
      row.two_band = band;
      row.mandated =
          operator_norm(*rem, 0.0, 0.0, 0, 11, max_iter, rel_tol).norm;
      row.contrast =
          operator_norm(*rem, 1.0, 0.0, band / 2, 13, max_iter, rel_tol).norm;
      row.shell_bracket = xi_bracket(band / 2);
      rep.rows.push_back(row);
    };

    {  // multiplier composed with a paraproduct vs the sharp symbol
      const Symbol sharp = compose_sharp(
          multiplier_symbol(bracket, room),
          regularize(coefficient_symbol(c2, band), chi_g), ops, 1);
      add_row("smooth-compose",
              lincomb_ops(1.0, compose_ops(h, t_c2), -1.0,
                          quantized_operator(sharp, band, band)));
    }
    const OpPtr tq =
        compose_ops(para_operator(c1, gap, band + wide, band),
                    quantized_operator(b1_reg, band, band + wide));
    {  // paraproduct composed with a para-differential operator
      const Symbol a1 = regularize(coefficient_symbol(c1, room), chi_g);
      const Symbol sharp = regularize(
          compose_sharp(a1, b1_reg, ops, 1, c1.two_band + 1), chi_g);
      add_row("rough-compose",
              lincomb_ops(1.0, tq, -1.0,
                          quantized_operator(sharp, band, band)));
    }
    {  // commutator of the same pair, both orders through the wide band
      const Symbol b1w =
          regularize(coefficient_field_symbol(c2, x3, band + wide), chi_g);
      const OpPtr qt =
          compose_ops(quantized_operator(b1w, band + wide, band),
                      para_operator(c1, gap, band, band + wide));
      add_row("commutator", lincomb_ops(1.0, tq, -1.0, qt));
    }
    {  // adjoint vs the adjoint-expansion symbol
      const Symbol sharp = regularize(adjoint_sharp(b1, ops, 1), chi_g);
      add_row("adjoint",
              lincomb_ops(1.0, adjoint_operator(q_b1), -1.0,
                          quantized_operator(sharp, band, band)));
    }
    add_row("cutoff-freedom",
            lincomb_ops(1.0, q_b1, -1.0,
                        quantized_operator(regularize(b1, chi_w), band, band)));
    add_row("regularization-tail",
            quantized_operator(sub(b1, b1_reg), band, band));
  }
  return rep;
}

// ---- spectral-condition closure ----------------------------------------------

double measured_delta(const Symbol& a, double rel_tol) {
  double worst = 0.0;
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j) {
    double tot = 0.0;
    std::vector<double> mass(size_t(a.x_band()) + 1, 0.0);
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
      double m = 0.0;
      for (const auto& t : a.tensor(two_j, two_eta)) m += t.squaredNorm();
      mass[two_eta] = m * dim_of(two_eta);
      tot += mass[two_eta];
    }
    if (tot == 0.0) continue;
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta)
      if (mass[two_eta] > rel_tol * rel_tol * tot)
        worst = std::max(worst, xi_norm(two_eta) / xi_bracket(two_j));
  }
  return worst;
}

ClosureReport closure_probe(double delta, int two_band, uint64_t seed) {
  ClosureReport rep;
  rep.delta = delta;

  Rng rng(seed);
  const SpectralFunction c = random_zygmund_witness(rng, 8, 1.0);
  const auto basis = lie_algebra_basis();
  const Symbol a = coefficient_field_symbol(c, basis.E[2], two_band);
  const Symbol a_reg = regularize(a, admissible_cutoff(delta));

  rep.base_residual = spectral_condition_residual(a_reg, delta);
  rep.base_pass = spectral_condition_check(a_reg, delta);
  rep.base_delta = measured_delta(a_reg);
  rep.diff_delta = measured_delta(difference_op(a_reg, 0, 1));
  rep.deriv_delta = measured_delta(x_derivative(a_reg, basis.E[0]));
  return rep;
}

}  // namespace su2para
