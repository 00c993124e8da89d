#include "magchain/field_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace magchain {

namespace {

double two_cos_pi(double x) {
  // reduce mod 2 to keep the argument small
  double r = std::fmod(x, 2.0);
  return 2.0 * std::cos(std::numbers::pi * r);
}

// a_j from an exact A_j: forces a clean 0 when A + 1/2 is an integer.
double two_cos_pi_exact(const Rational& A) {
  // A + 1/2 integer <=> den == 2 and num odd (after reduction den==2 implies num odd)
  if (A.den == 2) return 0.0;
  Rational r = A.mod(2);
  return 2.0 * std::cos(std::numbers::pi * r.value());
}

}  // namespace

double CoefficientWindow::at(long long j) const {
  if (!covers(j, j)) throw std::out_of_range("CoefficientWindow: index outside window");
  return a[static_cast<size_t>(j - j_lo)];
}

bool CoefficientWindow::is_zero(long long j) const {
  return std::binary_search(zero_positions.begin(), zero_positions.end(), j);
}

FieldProfile FieldProfile::linear(Rational alpha, Rational theta) {
  FieldProfile p;
  p.kind_ = Kind::Linear;
  p.alpha_rat_ = alpha;
  p.theta_rat_ = theta;
  p.alpha_ = alpha.value();
  p.theta_ = theta.value();
  return p;
}

FieldProfile FieldProfile::linear(Rational alpha, double theta) {
  FieldProfile p;
  p.kind_ = Kind::Linear;
  p.alpha_rat_ = alpha;
  p.alpha_ = alpha.value();
  p.theta_ = theta;
  return p;
}

FieldProfile FieldProfile::linear(double alpha, double theta) {
  FieldProfile p;
  p.kind_ = Kind::Linear;
  p.alpha_ = alpha;
  p.theta_ = theta;
  return p;
}

FieldProfile FieldProfile::periodic(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("PeriodicList profile needs length >= 1");
  FieldProfile p;
  p.kind_ = Kind::PeriodicList;
  p.values_ = std::move(values);
  return p;
}

FieldProfile FieldProfile::explicit_window(long long j_lo, std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("Explicit profile needs a non-empty window");
  FieldProfile p;
  p.kind_ = Kind::Explicit;
  p.values_ = std::move(values);
  p.explicit_lo_ = j_lo;
  return p;
}

std::optional<int> FieldProfile::period() const {
  switch (kind_) {
    case Kind::Linear:
      if (alpha_rat_) return static_cast<int>(alpha_rat_->den);
      return std::nullopt;
    case Kind::PeriodicList:
      return static_cast<int>(values_.size());
    case Kind::Explicit:
      return std::nullopt;
  }
  return std::nullopt;
}

double FieldProfile::A(long long j) const {
  switch (kind_) {
    case Kind::Linear:
      if (alpha_rat_ && theta_rat_) return ((*alpha_rat_ * j) + *theta_rat_).value();
      return alpha_ * static_cast<double>(j) + theta_;
    case Kind::PeriodicList: {
      long long n = static_cast<long long>(values_.size());
      long long r = j % n;
      if (r < 0) r += n;
      return values_[static_cast<size_t>(r)];
    }
    case Kind::Explicit: {
      long long hi = explicit_lo_ + static_cast<long long>(values_.size()) - 1;
      if (j < explicit_lo_ || j > hi)
        throw std::out_of_range("Explicit profile queried outside its declared range");
      return values_[static_cast<size_t>(j - explicit_lo_)];
    }
  }
  throw std::logic_error("unreachable");
}

CoefficientWindow FieldProfile::evaluate(long long j_lo, long long j_hi,
                                         double tol_zero) const {
  if (j_lo > j_hi) throw std::invalid_argument("evaluate: j_lo > j_hi");
  CoefficientWindow w;
  w.j_lo = j_lo;
  w.period = period();
  w.a.reserve(static_cast<size_t>(j_hi - j_lo + 1));

  const bool exact = kind_ == Kind::Linear && alpha_rat_ && theta_rat_;
  for (long long j = j_lo; j <= j_hi; ++j) {
    double aj;
    if (exact) {
      aj = two_cos_pi_exact((*alpha_rat_ * j) + *theta_rat_);
    } else {
      aj = two_cos_pi(A(j));
    }
    if (!exact && std::abs(aj) <= tol_zero) aj = 0.0;
    if (aj == 0.0) w.zero_positions.push_back(j);
    w.a.push_back(aj);
  }
  return w;
}

std::optional<long long> FieldProfile::degenerate_flux_check(double tol_zero) const {
  if (kind_ != Kind::Linear || !alpha_rat_)
    throw std::invalid_argument("degenerate_flux_check needs a Linear profile with rational alpha");
  const long long q = alpha_rat_->den;
  if (theta_rat_) {
    for (long long j = 0; j < q; ++j) {
      Rational A = (*alpha_rat_ * j) + *theta_rat_;
      // A + 1/2 integer <=> reduced denominator of A is exactly 2
      if (A.den == 2) return j;
    }
    return std::nullopt;
  }
  // irrational theta: tolerance-based classification
  for (long long j = 0; j < q; ++j) {
    double x = alpha_ * static_cast<double>(j) + theta_ + 0.5;
    double d = std::abs(x - std::round(x));
    if (d <= tol_zero) return j;
  }
  return std::nullopt;
}

}  // namespace magchain
