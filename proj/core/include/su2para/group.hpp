#pragma once

#include <Eigen/Dense>

#include "su2para/types.hpp"

namespace su2para {

// Chart: alpha in [0,2pi), beta in [0,pi], gamma in [0,4pi).  The gamma range
// carries the double cover: (alpha,beta,gamma+2pi) is the antipodal point.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// Unitary 2x2 with determinant 1, of the form [[a, b], [-conj(b), conj(a)]].
class GroupPoint {
 public:
  GroupPoint() : m_(Eigen::Matrix2cd::Identity()) {}
  explicit GroupPoint(const Eigen::Matrix2cd& m);

  const Eigen::Matrix2cd& matrix() const { return m_; }
  cplx a() const { return m_(0, 0); }
  cplx b() const { return m_(0, 1); }

 private:
  Eigen::Matrix2cd m_;
};

GroupPoint identity_point();
GroupPoint multiply(const GroupPoint& g, const GroupPoint& h);
GroupPoint inverse(const GroupPoint& g);

GroupPoint from_euler(const EulerAngles& e);
// At beta in {0, pi} the chart is degenerate; the representative puts the
// accumulated phase into alpha and keeps gamma in {0, 2pi}.
EulerAngles to_euler(const GroupPoint& g);

// Rotation angle theta(g) in [0, pi]: eigenvalues of g are exp(+-i theta).
double rotation_angle(const GroupPoint& g);

// Bi-invariant geodesic distance; dist(e, exp(X)) = |X| in the -kappa*Killing
// metric, so dist(e, g) = 2*sqrt(2*kappa)*theta(g).
double distance(const GroupPoint& g, const GroupPoint& h);

}  // namespace su2para
