#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace magchain {

/// Branch interval I_n of the eta map: the preimage of [-4, 4] inside
/// (n^2, (n+1)^2) for n >= 1, or inside (-inf, 1) for n = 0. eta is
/// strictly monotone on each branch.
struct BranchInterval {
  int n = 0;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;
  int direction = -1;  // sign of eta' on the interior
  bool contains(double z) const { return z >= lo && z <= hi; }
};

/// The duality function eta(z) = gamma sin(pi sqrt z)/sqrt z + 4 cos(pi sqrt z),
/// hyperbolically continued to z < 0, with a series fallback near z = 0.
class EtaMap {
 public:
  explicit EtaMap(double gamma) : gamma_(gamma) {}

  double gamma() const { return gamma_; }
  double operator()(double z) const;

  /// I_0, ..., I_{n_max}. Finite endpoints located by bisection of
  /// eta = +-4 to 1e-10; the gamma-regime shape rules are asserted.
  std::vector<BranchInterval> branch_intervals(int n_max) const;

  /// The unique z in the branch with eta(z) = lambda, |eta(z)-lambda| <= 1e-10.
  /// Branch intervals are treated as closed.
  double preimage_on_branch(const BranchInterval& branch, double lambda) const;

  /// All (n, z) with n <= n_max and eta(z) = lambda, z in I_n; sorted by n.
  /// Requires lambda in [-4, 4].
  std::vector<std::pair<int, double>> preimage(double lambda, int n_max) const;

 private:
  double gamma_;
};

}  // namespace magchain
