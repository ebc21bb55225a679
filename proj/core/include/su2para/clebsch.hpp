#pragma once

#include <vector>

#include "su2para/spectral.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Clebsch-Gordan coefficient <j1 m1, j2 m2 | j3 m3>.  All arguments doubled
// (two_j, two_m) so half-integer spins stay exact integers.  Returns 0 when
// the triangle or parity conditions fail.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_j3, int two_m3);

// Cached coupling matrix U for fixed (j1, j2, j3):
//   U(i1 * dim(j2) + i2, i3) = <j1 m(i1), j2 m(i2) | j3 m(i3)>
// with ascending magnetic index per factor.  Rows satisfy the intertwining
// relation  D^{j1} (x) D^{j2} . U = U . D^{j3}.
const MatrixXd& cg_matrix(int two_j1, int two_j2, int two_j3);

// Full unitary change of basis H_{j1} (x) H_{j2} -> (+)_{j} H_j, blocks
// stacked by ascending j.  Columns ordered (j, m) with m ascending inside j.
MatrixXd cg_full_intertwiner(int two_j1, int two_j2);

// Degrees appearing in the decomposition of j1 (x) j2 (doubled labels).
std::vector<int> product_support(int two_j1, int two_j2);

// Fourier-support audit of a pointwise product: measures how much Plancherel
// mass of f*g (pointwise) falls outside the degree window predicted by the
// supports of f and g.
struct LocalizationReport {
  std::vector<int> support_f, support_g, predicted, observed;
  double inside_mass = 0.0;
  double outside_mass = 0.0;  // relative to total
};
LocalizationReport verify_spec_prd(const SpectralFunction& f,
                                   const SpectralFunction& g);

// Number of Plancherel degrees of freedom below threshold:
//   sum of d_j^2 over |xi_j| <= t.
long long weyl_count(double t);
// weyl_count(t) / t^3, the quantity bracketed by the Weyl law at large t.
double weyl_ratio(double t);

}  // namespace su2para
