#include "magchain/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace magchain {

TruncatedJacobi truncate(const CoefficientWindow& window, long long j_lo, long long j_hi) {
  if (j_lo > j_hi) throw std::invalid_argument("truncate: empty index range");
  if (!window.covers(j_lo, std::max(j_lo, j_hi - 1)))
    throw std::invalid_argument("truncate: window too small for requested section");
  TruncatedJacobi T;
  T.dim = static_cast<int>(j_hi - j_lo + 1);
  T.off_diagonal.reserve(static_cast<size_t>(T.dim - 1));
  for (long long j = j_lo; j < j_hi; ++j) T.off_diagonal.push_back(window.at(j));
  return T;
}

namespace {

double gershgorin_radius(const TruncatedJacobi& T) {
  const int n = T.dim;
  double r = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    if (i > 0) row += std::abs(T.off_diagonal[static_cast<size_t>(i - 1)]);
    if (i < n - 1) row += std::abs(T.off_diagonal[static_cast<size_t>(i)]);
    r = std::max(r, row);
  }
  return r;
}

}  // namespace

int count_below(const TruncatedJacobi& T, double x) {
  const int n = T.dim;
  if (n < 1) throw std::invalid_argument("count_below: empty matrix");
  double bbmax = 0.0;
  for (double b : T.off_diagonal) bbmax = std::max(bbmax, b * b);
  const double pivmin = std::max(std::numeric_limits<double>::min() * std::max(bbmax, 1.0),
                                 std::numeric_limits<double>::min());
  // Negative-pivot count of the LDL^T factorization of T - x. A vanishing
  // pivot is replaced by -pivmin and counted as negative (LAPACK convention),
  // which keeps the count consistent on both sides of an eigenvalue.
  int cnt = 0;
  double d = -x;
  if (std::abs(d) <= pivmin) d = -pivmin;
  if (d < 0.0) ++cnt;
  for (int i = 1; i < n; ++i) {
    const double bb = T.off_diagonal[static_cast<size_t>(i - 1)] * T.off_diagonal[static_cast<size_t>(i - 1)];
    if (bb == 0.0)
      d = -x;  // decoupled block restarts the recurrence
    else
      d = -x - bb / d;
    if (std::abs(d) <= pivmin) d = -pivmin;
    if (d < 0.0) ++cnt;
  }
  return cnt;
}

std::vector<double> eigenvalues(const TruncatedJacobi& T) {
  const int n = T.dim;
  if (n < 1) throw std::invalid_argument("eigenvalues: empty matrix");
  const double r = gershgorin_radius(T) + 1e-8;
  const double tol = 1e-12 * std::max(1.0, r);
  std::vector<double> ev(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double lo = -r, hi = r;
    while (hi - lo > tol) {
      double mid = 0.5 * (lo + hi);
      if (count_below(T, mid) > k)
        hi = mid;
      else
        lo = mid;
    }
    ev[static_cast<size_t>(k)] = 0.5 * (lo + hi);
  }
  return ev;
}

TruncatedJacobi apply_sign_gauge(const TruncatedJacobi& T, const std::vector<int>& target_signs) {
  if (target_signs.size() != T.off_diagonal.size())
    throw std::invalid_argument("apply_sign_gauge: sign pattern length mismatch");
  TruncatedJacobi out = T;
  for (size_t i = 0; i < out.off_diagonal.size(); ++i) {
    if (target_signs[i] != 1 && target_signs[i] != -1)
      throw std::invalid_argument("apply_sign_gauge: signs must be +1/-1");
    out.off_diagonal[i] = target_signs[i] * std::abs(out.off_diagonal[i]);
  }
  return out;
}

double norm_bound(const CoefficientWindow& window) {
  const size_t n = window.a.size();
  if (n == 0) throw std::invalid_argument("norm_bound: empty window");
  double sup = 0.0;
  if (window.period && n >= static_cast<size_t>(*window.period)) {
    const int q = *window.period;
    for (int j = 0; j < q; ++j) {
      const double aj = window.a[static_cast<size_t>(j)];
      const double ajm1 = window.a[static_cast<size_t>((j - 1 + q) % q)];
      sup = std::max(sup, std::abs(ajm1) + std::abs(aj));
    }
  } else {
    if (n == 1) return std::abs(window.a[0]);
    for (size_t j = 1; j < n; ++j)
      sup = std::max(sup, std::abs(window.a[j - 1]) + std::abs(window.a[j]));
  }
  return sup;
}

}  // namespace magchain
