#pragma once

#include <optional>
#include <vector>

#include "magchain/rational.hpp"

namespace magchain {

/// Default tolerance for classifying a_j = 0 when exact arithmetic is not
/// available (irrational alpha or theta).
inline constexpr double kTolZero = 1e-12;

/// Finite window of Jacobi coefficients a_j = 2 cos(pi A_j).
struct CoefficientWindow {
  long long j_lo = 0;
  std::vector<double> a;
  std::optional<int> period;
  std::vector<long long> zero_positions;  // sorted indices j with a_j = 0

  long long j_hi() const { return j_lo + static_cast<long long>(a.size()) - 1; }
  bool covers(long long lo, long long hi) const { return lo >= j_lo && hi <= j_hi(); }
  double at(long long j) const;
  bool is_zero(long long j) const;
};

/// Rule producing the magnetic vector-potential sequence A_j.
///
/// Linear profiles A_j = alpha*j + theta keep alpha and theta as reduced
/// fractions whenever they were given as such, so that the degenerate-flux
/// condition A_j + 1/2 in Z is decided in integer arithmetic.
class FieldProfile {
 public:
  enum class Kind { Linear, PeriodicList, Explicit };

  static FieldProfile linear(Rational alpha, Rational theta);
  static FieldProfile linear(Rational alpha, double theta);
  static FieldProfile linear(double alpha, double theta);
  static FieldProfile periodic(std::vector<double> values);
  static FieldProfile explicit_window(long long j_lo, std::vector<double> values);

  Kind kind() const { return kind_; }
  std::optional<Rational> alpha_rational() const { return alpha_rat_; }
  std::optional<Rational> theta_rational() const { return theta_rat_; }
  double alpha() const { return alpha_; }
  double theta() const { return theta_; }
  const std::vector<double>& values() const { return values_; }

  /// Smallest q such that |a_{j+q}| = |a_j| holds identically, when known:
  /// q for Linear with rational alpha, the list length for PeriodicList.
  std::optional<int> period() const;

  /// Vector potential at ring j. Throws for Explicit profiles outside the
  /// declared range.
  double A(long long j) const;

  /// Jacobi coefficients a_j = 2 cos(pi A_j) for j in [j_lo, j_hi].
  /// Exact zeros of rational Linear profiles are detected analytically.
  CoefficientWindow evaluate(long long j_lo, long long j_hi,
                             double tol_zero = kTolZero) const;

  /// Band/point dichotomy test: the unique residue j0 mod q with
  /// alpha*j0 + theta + 1/2 in Z, if theta makes it solvable.
  /// Requires a Linear profile with rational alpha.
  std::optional<long long> degenerate_flux_check(double tol_zero = kTolZero) const;

 private:
  FieldProfile() = default;

  Kind kind_ = Kind::Linear;
  std::optional<Rational> alpha_rat_;
  std::optional<Rational> theta_rat_;
  double alpha_ = 0.0;
  double theta_ = 0.0;
  std::vector<double> values_;  // PeriodicList values or Explicit window of A_j
  long long explicit_lo_ = 0;
};

}  // namespace magchain
