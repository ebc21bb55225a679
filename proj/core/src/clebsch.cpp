#include "su2para/clebsch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace su2para {

namespace {

// log(n!) with an exact small-n table; lgamma covers the tail.
double log_fact(int n) {
  static const double table[] = {0.0,
                                 0.0,
                                 0.6931471805599453,
                                 1.791759469228055,
                                 3.1780538303479458,
                                 4.787491742782046,
                                 6.579251212010101,
                                 8.525161361065415,
                                 10.60460290274525,
                                 12.801827480081469};
  if (n < 0) return -1.0;  // caller guards; keep deterministic
  if (n < 10) return table[n];
  return std::lgamma(double(n) + 1.0);
}

struct TableKey {
  int a, b, c;
  bool operator<(const TableKey& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
  }
};

bool triangle_ok(int two_j1, int two_j2, int two_j3) {
  if ((two_j1 + two_j2 + two_j3) % 2 != 0) return false;
  return two_j3 >= std::abs(two_j1 - two_j2) && two_j3 <= two_j1 + two_j2;
}

}  // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_j3, int two_m3) {
  if (!triangle_ok(two_j1, two_j2, two_j3)) return 0.0;
  if (two_m1 + two_m2 != two_m3) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 ||
      std::abs(two_m3) > two_j3)
    return 0.0;
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0) return 0.0;

  // All Racah factorial arguments, as plain integers.
  const int j1pm1 = (two_j1 + two_m1) / 2, j1mm1 = (two_j1 - two_m1) / 2;
  const int j2pm2 = (two_j2 + two_m2) / 2, j2mm2 = (two_j2 - two_m2) / 2;
  const int j3pm3 = (two_j3 + two_m3) / 2, j3mm3 = (two_j3 - two_m3) / 2;
  const int t1 = (two_j1 + two_j2 - two_j3) / 2;
  const int t2 = (two_j1 - two_j2 + two_j3) / 2;
  const int t3 = (-two_j1 + two_j2 + two_j3) / 2;
  const int tsum = (two_j1 + two_j2 + two_j3) / 2 + 1;

  const double pref =
      0.5 * (std::log(double(two_j3 + 1)) + log_fact(t1) + log_fact(t2) +
             log_fact(t3) - log_fact(tsum) + log_fact(j1pm1) +
             log_fact(j1mm1) + log_fact(j2pm2) + log_fact(j2mm2) +
             log_fact(j3pm3) + log_fact(j3mm3));

  // k-sum limits keep every factorial argument non-negative.
  const int a1 = (two_j3 - two_j2 + two_m1) / 2;  // j3 - j2 + m1
  const int a2 = (two_j3 - two_j1 - two_m2) / 2;  // j3 - j1 - m2
  const int k_lo = std::max({0, -a1, -a2});
  const int k_hi = std::min({t1, j1mm1, j2pm2});
  if (k_lo > k_hi) return 0.0;

  // Sum scaled by the largest term to dodge overflow.
  double max_log = -1e300;
  std::vector<double> logs;
  logs.reserve(k_hi - k_lo + 1);
  for (int k = k_lo; k <= k_hi; ++k) {
    const double lg = -(log_fact(k) + log_fact(t1 - k) + log_fact(j1mm1 - k) +
                        log_fact(j2pm2 - k) + log_fact(a1 + k) +
                        log_fact(a2 + k));
    logs.push_back(lg);
    max_log = std::max(max_log, lg);
  }
  double s = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double term = std::exp(logs[k - k_lo] - max_log);
    s += (k % 2 == 0) ? term : -term;
  }
  if (s == 0.0) return 0.0;
  const double sign = s > 0 ? 1.0 : -1.0;
  return sign * std::exp(pref + max_log + std::log(std::abs(s)));
}

const MatrixXd& cg_matrix(int two_j1, int two_j2, int two_j3) {
  require(triangle_ok(two_j1, two_j2, two_j3),
          "cg_matrix: (j1,j2,j3) violates the triangle rule");
  static std::map<TableKey, MatrixXd> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  const TableKey key{two_j1, two_j2, two_j3};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int d1 = dim_of(two_j1), d2 = dim_of(two_j2), d3 = dim_of(two_j3);
  MatrixXd u(d1 * d2, d3);
  for (int i1 = 0; i1 < d1; ++i1) {
    const int two_m1 = 2 * i1 - two_j1;
    for (int i2 = 0; i2 < d2; ++i2) {
      const int two_m2 = 2 * i2 - two_j2;
      for (int i3 = 0; i3 < d3; ++i3) {
        const int two_m3 = 2 * i3 - two_j3;
        u(i1 * d2 + i2, i3) =
            clebsch_gordan(two_j1, two_m1, two_j2, two_m2, two_j3, two_m3);
      }
    }
  }
  return cache.emplace(key, std::move(u)).first->second;
}

MatrixXd cg_full_intertwiner(int two_j1, int two_j2) {
  const int d1 = dim_of(two_j1), d2 = dim_of(two_j2);
  MatrixXd u(d1 * d2, d1 * d2);
  int col = 0;
  for (int two_j3 : product_support(two_j1, two_j2)) {
    const int d3 = dim_of(two_j3);
    u.middleCols(col, d3) = cg_matrix(two_j1, two_j2, two_j3);
    col += d3;
  }
  require(col == d1 * d2, "cg_full_intertwiner: dimension mismatch");
  return u;
}

std::vector<int> product_support(int two_j1, int two_j2) {
  std::vector<int> out;
  for (int two_j = std::abs(two_j1 - two_j2); two_j <= two_j1 + two_j2;
       two_j += 2)
    out.push_back(two_j);
  return out;
}

LocalizationReport verify_spec_prd(const SpectralFunction& f,
                                   const SpectralFunction& g) {
  LocalizationReport rep;
  const double tiny = 1e-14;
  auto support_of = [&](const SpectralFunction& h) {
    std::vector<int> s;
    const double scale = plancherel_norm(h);
    for (int two_j = 0; two_j <= h.two_band; ++two_j)
      if (h.block(two_j).size() > 0 &&
          h.block(two_j).norm() > tiny * (scale + 1.0))
        s.push_back(two_j);
    return s;
  };
  rep.support_f = support_of(f);
  rep.support_g = support_of(g);

  std::vector<char> allowed(f.two_band + g.two_band + 1, 0);
  for (int a : rep.support_f)
    for (int b : rep.support_g)
      for (int c : product_support(a, b)) allowed[c] = 1;
  for (int two_j = 0; two_j < int(allowed.size()); ++two_j)
    if (allowed[two_j]) rep.predicted.push_back(two_j);

  auto banded = product(f, g, f.two_band + g.two_band);
  const auto& p = banded.fn;
  double in2 = 0.0, out2 = 0.0;
  for (int two_j = 0; two_j <= p.two_band; ++two_j) {
    const double mass =
        dim_of(two_j) * p.block(two_j).squaredNorm();
    if (mass > 0 && p.block(two_j).norm() > tiny) rep.observed.push_back(two_j);
    if (allowed[two_j])
      in2 += mass;
    else
      out2 += mass;
  }
  const double tot = in2 + out2;
  rep.inside_mass = tot > 0 ? std::sqrt(in2 / tot) : 1.0;
  rep.outside_mass = tot > 0 ? std::sqrt(out2 / tot) : 0.0;
  return rep;
}

long long weyl_count(double t) {
  if (t < 0) return 0;
  long long total = 0;
  for (int two_j = 0;; ++two_j) {
    if (xi_norm(two_j) > t) break;
    const long long d = dim_of(two_j);
    total += d * d;
  }
  return total;
}

double weyl_ratio(double t) {
  require(t > 0, "weyl_ratio: t must be positive");
  return double(weyl_count(t)) / (t * t * t);
}

}  // namespace su2para
