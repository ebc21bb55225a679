#include "su2para/group.hpp"

#include <cmath>

namespace su2para {

namespace {
double g_kappa = 1.0;

constexpr double kPi = 3.14159265358979323846;

double wrap(double x, double period) {
  double y = std::fmod(x, period);
  if (y < 0) y += period;
  // fmod can return the period itself after the += when x is a tiny negative.
  if (y >= period) y -= period;
  return y;
}
}  // namespace

double metric_kappa() { return g_kappa; }

void set_metric_kappa(double kappa) {
  require(kappa > 0.0, "metric_kappa must be positive");
  g_kappa = kappa;
}

GroupPoint::GroupPoint(const Eigen::Matrix2cd& m) : m_(m) {
  const double unitary_defect =
      (m * m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  const double det_defect = std::abs(m.determinant() - cplx(1.0, 0.0));
  require(unitary_defect < 1e-12 && det_defect < 1e-12,
          "GroupPoint: matrix is not in SU(2) within 1e-12");
}

GroupPoint identity_point() { return GroupPoint(); }

GroupPoint multiply(const GroupPoint& g, const GroupPoint& h) {
  return GroupPoint(g.matrix() * h.matrix());
}

GroupPoint inverse(const GroupPoint& g) {
  return GroupPoint(g.matrix().adjoint().eval());
}

GroupPoint from_euler(const EulerAngles& e) {
  const double c = std::cos(0.5 * e.beta);
  const double s = std::sin(0.5 * e.beta);
  const cplx ep = std::polar(1.0, 0.5 * (e.alpha + e.gamma));
  const cplx em = std::polar(1.0, 0.5 * (e.alpha - e.gamma));
  Eigen::Matrix2cd m;
  m << ep * c, em * s, -std::conj(em) * s, std::conj(ep) * c;
  return GroupPoint(m);
}

EulerAngles to_euler(const GroupPoint& g) {
  const cplx a = g.a();
  const cplx b = g.b();
  EulerAngles e;
  e.beta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  const double arg_a = (std::abs(a) > 0) ? std::arg(a) : 0.0;
  const double arg_b = (std::abs(b) > 0) ? std::arg(b) : 0.0;
  e.alpha = wrap(arg_a + arg_b, 2.0 * kPi);
  e.gamma = wrap(2.0 * arg_a - e.alpha, 4.0 * kPi);
  return e;
}

double rotation_angle(const GroupPoint& g) {
  const cplx a = g.a();
  const double s = std::hypot(a.imag(), std::abs(g.b()));
  return std::atan2(s, a.real());
}

double distance(const GroupPoint& g, const GroupPoint& h) {
  const GroupPoint rel = multiply(inverse(g), h);
  return 2.0 * std::sqrt(2.0 * metric_kappa()) * rotation_angle(rel);
}

}  // namespace su2para
