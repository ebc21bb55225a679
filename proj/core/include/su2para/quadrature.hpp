#pragma once

#include <memory>
#include <vector>

#include "su2para/group.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Product rule for normalized Haar measure in Euler coordinates:
// uniform alpha (2*two_B+2 points on [0,2pi)), Gauss-Legendre in cos(beta),
// uniform gamma (4*two_B+2 points on [0,4pi), covering the double cover).
// Exact for D^{j1}_{mn} * conj(D^{j2}_{m'n'}) whenever j1, j2 <= bandlimit.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(int two_band);

  int two_band() const { return two_band_; }
  int n_alpha() const { return static_cast<int>(alpha_.size()); }
  int n_beta() const { return static_cast<int>(beta_.size()); }
  int n_gamma() const { return static_cast<int>(gamma_.size()); }
  long node_count() const {
    return static_cast<long>(n_alpha()) * n_beta() * n_gamma();
  }

  double alpha(int ia) const { return alpha_[ia]; }
  double beta(int ib) const { return beta_[ib]; }
  double gamma(int ig) const { return gamma_[ig]; }
  // Includes the alpha/gamma uniform factors; node weights sum to 1.
  double node_weight(int ib) const { return beta_w_[ib] / (n_alpha() * static_cast<double>(n_gamma())); }
  double beta_weight(int ib) const { return beta_w_[ib]; }

  long node_index(int ia, int ib, int ig) const {
    return (static_cast<long>(ia) * n_beta() + ib) * n_gamma() + ig;
  }
  EulerAngles node_euler(int ia, int ib, int ig) const {
    return EulerAngles{alpha_[ia], beta_[ib], gamma_[ig]};
  }
  GroupPoint node_point(int ia, int ib, int ig) const {
    return from_euler(node_euler(ia, ib, ig));
  }
  // flat-index companions, layout matching node_index
  GroupPoint node_point(long idx) const {
    return node_point(static_cast<int>(idx / (static_cast<long>(n_beta()) * n_gamma())),
                      static_cast<int>((idx / n_gamma()) % n_beta()),
                      static_cast<int>(idx % n_gamma()));
  }
  double node_weight_flat(long idx) const {
    return node_weight(static_cast<int>((idx / n_gamma()) % n_beta()));
  }

 private:
  int two_band_;
  std::vector<double> alpha_, beta_, beta_w_, gamma_;
};

// Gauss-Legendre nodes/weights on [-1,1], weights summing to 2.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Builds the grid and runs a sampled Schur-orthogonality self-test
// (residual above 1e-10 throws).  The exhaustive check lives with the
// transforms; see verify_schur in spectral.hpp.
std::shared_ptr<const QuadratureGrid> haar_grid(int two_band);

bool same_grid(const QuadratureGrid& a, const QuadratureGrid& b);

}  // namespace su2para
