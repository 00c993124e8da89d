#pragma once

#include "magchain/field_profile.hpp"
#include "magchain/spectrum_set.hpp"

namespace magchain {

/// One-period transfer-matrix product for the three-term recursion of L_A.
/// Entries are row-major 2x2; j is the starting site of the period.
struct TransferMatrix {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
  long long j = 0;
  double trace() const { return m00 + m11; }
  double det() const { return m00 * m11 - m01 * m10; }
};

/// Product T_{q-1}(lambda) ... T_0(lambda) over one period starting at the
/// window's first index, with T_j = [[lambda/a_j, -a_{j-1}/a_j], [1, 0]] and
/// periodic wrap a_{-1} := a_{q-1}. Requires a_j != 0 throughout the period.
TransferMatrix monodromy(const CoefficientWindow& window, double lambda);

/// Discriminant trace(monodromy)(lambda), optionally with d/dlambda.
double discriminant(const CoefficientWindow& window, double lambda, double* deriv = nullptr);

/// Band spectrum {lambda : |discriminant| <= 2} for a zero-free period:
/// exactly q closed intervals, located by bracketed bisection on the
/// monotone pieces between the discriminant's critical points.
BandSet bands_nondegenerate(const CoefficientWindow& window);

/// Independent check: q x q Bloch matrix swept over n_kappa quasimomenta
/// in [0, pi]; per-index eigenvalue ranges give the q bands.
BandSet bands_bloch_oracle(const CoefficientWindow& window, int n_kappa);

/// Pure-point spectrum when the period contains zeros: eigenvalues of the
/// tridiagonal blocks between consecutive zero couplings.
BandSet blocks_degenerate(const CoefficientWindow& window);

}  // namespace magchain
