#pragma once

#include <vector>

#include "magchain/field_profile.hpp"

namespace magchain {

/// Finite section of the dual operator L_A with hard (Dirichlet) cutoff:
/// zero diagonal, off-diagonals (a_{j_lo}, ..., a_{j_hi-1}).
struct TruncatedJacobi {
  int dim = 0;
  std::vector<double> off_diagonal;  // size dim-1
};

/// Section over [j_lo, j_hi]; couplings outside the window are dropped.
TruncatedJacobi truncate(const CoefficientWindow& window, long long j_lo, long long j_hi);

/// Number of eigenvalues strictly below x (Sturm-sequence count).
int count_below(const TruncatedJacobi& T, double x);

/// All eigenvalues, ascending, by Sturm-sequence bisection.
/// Absolute accuracy better than 1e-10 * max(1, spectral radius).
std::vector<double> eigenvalues(const TruncatedJacobi& T);

/// Replaces the signs of the off-diagonals, keeping magnitudes. Isospectral.
TruncatedJacobi apply_sign_gauge(const TruncatedJacobi& T, const std::vector<int>& target_signs);

/// sup_j (|a_{j-1}| + |a_j|), over one period (with wrap) when the window
/// is periodic and long enough, otherwise over the window.
double norm_bound(const CoefficientWindow& window);

}  // namespace magchain
