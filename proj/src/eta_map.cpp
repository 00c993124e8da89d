#include "magchain/eta_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "magchain/errors.hpp"

namespace magchain {

namespace {

constexpr double kPi = std::numbers::pi;

// s(pi; z) = sin(pi sqrt z)/sqrt z, entire in z; series branch avoids the
// cancellation at z = 0 and covers small negative z uniformly.
double s_pi(double z) {
  if (std::abs(z) < 1e-8) {
    // pi * sum_k (-pi^2 z)^k / (2k+1)!
    const double w = -kPi * kPi * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 6; ++k) {
      term *= w / ((2 * k) * (2 * k + 1));
      sum += term;
    }
    return kPi * sum;
  }
  if (z > 0) {
    const double r = std::sqrt(z);
    return std::sin(kPi * r) / r;
  }
  const double kappa = std::sqrt(-z);
  return std::sinh(kPi * kappa) / kappa;
}

double c_pi(double z) {
  if (std::abs(z) < 1e-8) {
    const double w = -kPi * kPi * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 6; ++k) {
      term *= w / ((2 * k - 1) * (2 * k));
      sum += term;
    }
    return sum;
  }
  if (z > 0) return std::cos(kPi * std::sqrt(z));
  return std::cosh(kPi * std::sqrt(-z));
}

}  // namespace

double EtaMap::operator()(double z) const { return gamma_ * s_pi(z) + 4.0 * c_pi(z); }

namespace {

// Root of eta(z) = level inside [x0, x1]; f(x0), f(x1) must differ in sign
// (endpoint roots allowed).
double bisect_eta(const EtaMap& eta, double level, double x0, double x1) {
  double f0 = eta(x0) - level;
  double f1 = eta(x1) - level;
  if (f0 == 0.0) return x0;
  if (f1 == 0.0) return x1;
  if ((f0 < 0) == (f1 < 0))
    throw bracketing_error("eta endpoint search: level not bracketed");
  for (int it = 0; it < 200 && x1 - x0 > 1e-14 * std::max(1.0, std::abs(x0)); ++it) {
    const double xm = 0.5 * (x0 + x1);
    const double fm = eta(xm) - level;
    if (fm == 0.0) return xm;
    if ((fm < 0) == (f0 < 0)) {
      x0 = xm;
      f0 = fm;
    } else {
      x1 = xm;
      f1 = fm;
    }
  }
  return 0.5 * (x0 + x1);
}

// eta' sign sampling; only the sign matters, so central differences suffice.
void verify_monotone(const EtaMap& eta, const BranchInterval& br) {
  const double len = br.hi - br.lo;
  if (len <= 0) throw monotonicity_error("branch has non-positive length");
  int sign = 0;
  for (int i = 1; i <= 128; ++i) {
    const double z = br.lo + len * i / 129.0;
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    const double d = eta(z + h) - eta(z - h);
    const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s == 0) continue;
    if (sign == 0) sign = s;
    if (s != sign)
      throw monotonicity_error("eta not monotone on branch I_" + std::to_string(br.n));
  }
  if (sign != br.direction)
    throw monotonicity_error("eta direction mismatch on branch I_" + std::to_string(br.n));
}

}  // namespace

std::vector<BranchInterval> EtaMap::branch_intervals(int n_max) const {
  if (n_max < 0) throw std::invalid_argument("branch_intervals: n_max must be >= 0");
  const EtaMap& eta = *this;
  std::vector<BranchInterval> out;

  // I_0: eta is decreasing on it in every gamma regime, from +4 down to -4.
  {
    BranchInterval br;
    br.n = 0;
    br.direction = -1;
    const double eta0 = eta(0.0);  // gamma*pi + 4
    if (gamma_ == 0.0) {
      br.lo = 0.0;
      br.lo_closed = true;
      br.hi = 1.0;
      br.hi_closed = false;
    } else if (gamma_ > 0.0) {
      // eta(0) > 4, eta(1) = -4: a_0 in (0, 1)
      br.lo = bisect_eta(eta, 4.0, 0.0, 1.0);
      br.lo_closed = true;
      br.hi = 1.0;
      br.hi_closed = false;
    } else {
      // gamma < 0: eta(0) < 4; scan downward until eta > 4, then bisect.
      double z_in = 0.0, z_out = -1.0;
      const double cap = -(4.0 + std::abs(gamma_)) * (4.0 + std::abs(gamma_)) - 1.0;
      while (eta(z_out) <= 4.0) {
        z_in = z_out;
        z_out *= 2.0;
        if (z_out < cap)
          throw bracketing_error("I_0 lower endpoint: downward scan exhausted");
      }
      br.lo = bisect_eta(eta, 4.0, z_out, z_in);
      br.lo_closed = true;
      // Upper endpoint: the first crossing of -4. eta dips below -4 strictly
      // before z = 1 and only returns to -4 at z = 1 itself, so bracketing
      // against z = 1 would lock onto that endpoint root; bracket against the
      // interior minimum instead.
      br.hi_closed = true;
      if (eta0 < -4.0) {
        br.hi = bisect_eta(eta, -4.0, br.lo, 0.0);
      } else if (eta0 == -4.0) {
        br.hi = 0.0;
      } else {
        double lo_t = 0.0, hi_t = 1.0;
        for (int it = 0; it < 200; ++it) {
          const double m1 = lo_t + (hi_t - lo_t) / 3.0;
          const double m2 = hi_t - (hi_t - lo_t) / 3.0;
          if (eta(m1) < eta(m2))
            hi_t = m2;
          else
            lo_t = m1;
        }
        const double z_min = 0.5 * (lo_t + hi_t);
        if (eta(z_min) >= -4.0)
          throw bracketing_error("I_0 upper endpoint: interior minimum above -4");
        br.hi = bisect_eta(eta, -4.0, 0.0, z_min);
      }
    }
    verify_monotone(eta, br);
    // 0 in I_0 exactly when gamma in [-8/pi, 0]
    const bool zero_in = br.lo <= 1e-12 && br.hi >= -1e-12;
    const bool zero_expected = gamma_ >= -8.0 / kPi - 1e-12 && gamma_ <= 0.0;
    if (zero_in != zero_expected)
      throw monotonicity_error("I_0 shape violates the gamma-regime rule for 0 membership");
    out.push_back(br);
  }

  for (int n = 1; n <= n_max; ++n) {
    BranchInterval br;
    br.n = n;
    br.direction = (n % 2 == 0) ? -1 : +1;  // eta(n^2) = 4(-1)^n
    const double zl = static_cast<double>(n) * n;
    const double zr = static_cast<double>(n + 1) * (n + 1);
    if (gamma_ == 0.0) {
      br.lo = zl;
      br.lo_closed = false;
      br.hi = zr;
      br.hi_closed = false;
    } else if (gamma_ > 0.0) {
      // I_n = [a_n, (n+1)^2): eta leaves [-4,4] just above n^2
      const double level = (n % 2 == 0) ? 4.0 : -4.0;
      // bracket: |eta| > 4 right after zl, back to |eta| <= 4 before zr
      double z_out = zl + (zr - zl) * 1e-10;
      double z_in = zr - (zr - zl) * 1e-10;
      if (std::abs(eta(z_out)) <= 4.0 || std::abs(eta(z_in)) > 4.0)
        throw bracketing_error("I_n endpoint bracket failed for gamma > 0");
      br.lo = bisect_eta(eta, level, z_out, z_in);
      br.lo_closed = true;
      br.hi = zr;
      br.hi_closed = false;
    } else {
      // I_n = (n^2, b_n]
      const double level = (n % 2 == 0) ? -4.0 : 4.0;
      double z_in = zl + (zr - zl) * 1e-10;
      double z_out = zr - (zr - zl) * 1e-10;
      if (std::abs(eta(z_in)) > 4.0 || std::abs(eta(z_out)) <= 4.0)
        throw bracketing_error("I_n endpoint bracket failed for gamma < 0");
      br.lo = zl;
      br.lo_closed = false;
      br.hi = bisect_eta(eta, level, z_in, z_out);
      br.hi_closed = true;
    }
    verify_monotone(eta, br);
    out.push_back(br);
  }
  return out;
}

double EtaMap::preimage_on_branch(const BranchInterval& branch, double lambda) const {
  // band endpoints computed by bisection may overshoot +-4 by rounding
  if (lambda < -4.0 && lambda >= -4.0 - 1e-9) lambda = -4.0;
  if (lambda > 4.0 && lambda <= 4.0 + 1e-9) lambda = 4.0;
  if (lambda < -4.0 || lambda > 4.0)
    throw std::invalid_argument("preimage: lambda outside [-4, 4]");
  const EtaMap& eta = *this;
  double x0 = branch.lo, x1 = branch.hi;
  double f0 = eta(x0) - lambda;
  double f1 = eta(x1) - lambda;
  // endpoint values are +-4 to rounding; clamp tiny same-sign overshoots
  if (std::abs(f0) < 1e-9 && (f0 < 0) == (f1 < 0)) return x0;
  if (std::abs(f1) < 1e-9 && (f0 < 0) == (f1 < 0)) return x1;
  return bisect_eta(eta, lambda, x0, x1);
}

std::vector<std::pair<int, double>> EtaMap::preimage(double lambda, int n_max) const {
  if (lambda < -4.0 || lambda > 4.0)
    throw std::invalid_argument("preimage: lambda outside [-4, 4]");
  std::vector<std::pair<int, double>> out;
  for (const auto& br : branch_intervals(n_max))
    out.emplace_back(br.n, preimage_on_branch(br, lambda));
  return out;
}

}  // namespace magchain
