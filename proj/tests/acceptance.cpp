// Acceptance gate: one line per criterion, PASS or FAIL; exit status is the
// number of failing criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "magchain/fd_oracle.hpp"
#include "magchain/field_profile.hpp"
#include "magchain/floquet.hpp"
#include "magchain/graph_spectrum.hpp"
#include "magchain/jacobi.hpp"

using namespace magchain;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("criterion %2d [%s] %s%s%s\n", idx, ok ? "PASS" : "FAIL", what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

BandSet discrete_spectrum(const Rational& alpha, double theta) {
  const auto p = FieldProfile::linear(alpha, theta);
  const auto w = p.evaluate(0, alpha.den - 1);
  return w.zero_positions.empty() ? bands_nondegenerate(w) : blocks_degenerate(w);
}

// 1. single-site band formula
void criterion1() {
  double worst = 0.0;
  for (double theta : {0.0, 0.3, 0.5 - 1e-3}) {
    const auto s = discrete_spectrum(Rational(0, 1), theta);
    const double edge = 4.0 * std::abs(std::cos(kPi * theta));
    worst = std::max(worst, std::abs(s.bands.at(0).lo + edge));
    worst = std::max(worst, std::abs(s.bands.at(0).hi - edge));
  }
  report(1, "single-period band endpoints match the closed form", worst <= 1e-9,
         "max endpoint error " + format_double(worst));
}

// 2. degenerate dichotomy counts
void criterion2() {
  bool ok = true;
  std::string why;
  for (long long q = 1; q <= 8 && ok; ++q) {
    for (long long p = 0; p <= q && ok; ++p) {
      if (std::gcd(p, q) != 1) continue;
      std::vector<Rational> thetas;
      for (long long j = 0; j < 10; ++j) {
        // exactly degenerate: theta = 1/2 - alpha*j (makes A_j + 1/2 integral)
        thetas.push_back((Rational(1, 2) + Rational(-p * j, q)).mod(1));
        // generic: offset by 1/(4q), which can never complete a half-integer
        thetas.push_back((Rational(1, 2) + Rational(-p * j, q) + Rational(1, 4 * q)).mod(1));
      }
      for (const auto& th : thetas) {
        const auto profile = FieldProfile::linear(Rational(p, q), th);
        const bool degenerate = profile.degenerate_flux_check().has_value();
        const auto w = profile.evaluate(0, q - 1);
        const bool has_zero = !w.zero_positions.empty();
        if (degenerate != has_zero) {
          ok = false;
          why = "flux check disagrees with coefficient zeros";
          break;
        }
        const auto s = has_zero ? blocks_degenerate(w) : bands_nondegenerate(w);
        const long long count = has_zero ? static_cast<long long>(s.points.size())
                                         : static_cast<long long>(s.bands.size());
        if (count != q) {
          ok = false;
          why = "p/q = " + std::to_string(p) + "/" + std::to_string(q) + " gave " +
                std::to_string(count) + " components";
          break;
        }
      }
    }
  }
  report(2, "degenerate dichotomy: q points vs q bands for all q <= 8", ok, why);
}

// 3. discriminant bands vs Bloch sweep
void criterion3() {
  double worst = 0.0;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {3, 7}, {5, 8}}) {
    const auto w = FieldProfile::linear(Rational(p, q), 0.123).evaluate(0, q - 1);
    worst = std::max(worst,
                     hausdorff_distance(bands_nondegenerate(w), bands_bloch_oracle(w, 2001)));
  }
  report(3, "band finder vs Bloch sweep, Hausdorff distance", worst <= 1e-6,
         "max distance " + format_double(worst));
}

// 4. large truncations stay near the band set
void criterion4() {
  double worst = 0.0;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {3, 7}, {5, 8}}) {
    const auto profile = FieldProfile::linear(Rational(p, q), 0.123);
    const auto bands = bands_nondegenerate(profile.evaluate(0, q - 1));
    const auto window = profile.evaluate(0, 1999);
    for (double e : eigenvalues(truncate(window, 0, 1999)))
      worst = std::max(worst, distance_to(bands, e));
  }
  report(4, "n = 2000 truncation eigenvalues within 1e-2 of the band set", worst <= 1e-2,
         "max distance " + format_double(worst));
}

// 5. sign-gauge isospectrality
void criterion5() {
  std::mt19937 rng(42);
  std::bernoulli_distribution coin;
  const auto window = FieldProfile::linear(Rational(2, 5), 0.123).evaluate(0, 199);
  const auto T = truncate(window, 0, 199);
  const auto base = eigenvalues(T);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> signs;
    for (int i = 0; i < T.dim - 1; ++i) signs.push_back(coin(rng) ? 1 : -1);
    const auto flipped = eigenvalues(apply_sign_gauge(T, signs));
    for (size_t i = 0; i < base.size(); ++i)
      worst = std::max(worst, std::abs(flipped[i] - base[i]));
  }
  report(5, "sign-gauge isospectrality over 50 random patterns", worst <= 1e-12,
         "max deviation " + format_double(worst));
}

// 6. norm bound
void criterion6() {
  bool ok = true;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 5},
                                                      {3, 7}, {5, 8}}) {
    for (double theta : {0.0, 0.123, 0.5}) {
      const auto profile = FieldProfile::linear(Rational(p, q), theta);
      const auto window = profile.evaluate(0, 299);
      const double bound = norm_bound(window);
      for (double e : eigenvalues(truncate(window, 0, 299)))
        if (std::abs(e) > bound + 1e-12) ok = false;
    }
  }
  report(6, "no truncation eigenvalue exceeds the coupling-sum bound", ok);
}

// 7. eta map values and roundtrips
void criterion7() {
  double worst_zero = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double gamma = -4.0 + 0.45 * i;
    worst_zero = std::max(worst_zero, std::abs(EtaMap(gamma)(0.0) - (gamma * kPi + 4.0)));
  }
  double worst_rt = 0.0;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> lam_dist(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const EtaMap eta(trial % 2 ? 1.3 : -0.4);
    const double lam = lam_dist(rng);
    for (const auto& [n, z] : eta.preimage(lam, 10))
      worst_rt = std::max(worst_rt, std::abs(eta(z) - lam));
  }
  const auto zero_pre = EtaMap(0.0).preimage(0.0, 0);
  const bool quarter = zero_pre.size() == 1 && std::abs(zero_pre[0].second - 0.25) <= 1e-12;
  report(7, "eta values at zero, roundtrips, and the quarter preimage",
         worst_zero <= 1e-14 && worst_rt <= 1e-10 && quarter,
         "eta(0) err " + format_double(worst_zero) + ", roundtrip err " +
             format_double(worst_rt));
}

// 8. branch catalogue shapes
void criterion8() {
  bool ok = true;
  std::string why;
  for (double gamma : {1.0, -1.0, -8.0 / kPi, -5.0}) {
    const EtaMap eta(gamma);
    const auto branches = eta.branch_intervals(3);
    const auto& I0 = branches[0];
    for (const auto& br : branches) {
      if (br.lo_closed && std::abs(std::abs(eta(br.lo)) - 4.0) > 1e-9) ok = false;
      if (br.hi_closed && std::abs(std::abs(eta(br.hi)) - 4.0) > 1e-9) ok = false;
      if (br.n >= 1 && !(br.lo >= br.n * br.n && br.hi <= (br.n + 1.0) * (br.n + 1.0)))
        ok = false;
    }
    const bool zero_in = I0.contains(0.0);
    const bool zero_should = gamma >= -8.0 / kPi - 1e-12 && gamma <= 0.0;
    if (zero_in != zero_should) {
      ok = false;
      why = "0-in-I0 rule violated at gamma " + format_double(gamma);
    }
    if (gamma > 0 && !(I0.lo > 0.0 && I0.hi == 1.0 && !I0.hi_closed)) ok = false;
    if (gamma < 0 && !(I0.lo < 0.0 && I0.hi < 1.0 && I0.hi_closed)) ok = false;
    if (gamma <= -8.0 / kPi && I0.hi > 1e-8) ok = false;
  }
  report(8, "branch catalogue endpoint values and gamma-regime shapes", ok, why);
}

// 9. Dirichlet points sit strictly inside gaps
void criterion9() {
  const auto gs = assemble(FieldProfile::linear(Rational(1, 3), Rational(0, 1)), 1.0, 3);
  bool ok = gs.gaps.size() == 3;
  for (int n = 1; n <= 3 && ok; ++n) {
    const auto& gap = gs.gaps[n - 1];
    ok = gap.lo < n * n && n * n < gap.hi && !gap.touching;
  }
  report(9, "each n^2 lies strictly inside the adjacent spectral gap", ok);
}

// 10. measure decay along golden convergents
void criterion10() {
  std::vector<double> measures;
  for (const auto& alpha : golden_convergents(6))
    measures.push_back(total_measure(discrete_spectrum(alpha, 0.123)));
  bool decreasing = true;
  for (size_t i = 1; i < measures.size(); ++i)
    if (measures[i] >= measures[i - 1]) decreasing = false;
  const bool halved = measures.back() < 0.5 * measures[1];
  std::string detail = "measures";
  for (double m : measures) detail += " " + format_double(m);
  report(10, "band measure decays along golden convergents", decreasing && halved, detail);
}

// 11. finite-difference duality check with mesh refinement
void criterion11() {
  const auto profile = FieldProfile::linear(Rational(1, 3), Rational(0, 1));
  const auto predicted = assemble(profile, 1.0, 4);
  const auto eigs60 = fd_eigenvalues(assemble_fd(profile, 1.0, 15, 60), 16.0);
  const auto rep60 = compare_to_prediction(eigs60, predicted, 5e-2);
  const auto eigs120 = fd_eigenvalues(assemble_fd(profile, 1.0, 15, 120), 16.0);
  const auto rep120 = compare_to_prediction(eigs120, predicted, 5e-2);
  const bool shrinks = rep120.max_distance * 3.0 <= rep60.max_distance;
  report(11, "FD eigenvalues track the prediction and refine at O(h^2)",
         rep60.pass && shrinks,
         "max distance M=60: " + format_double(rep60.max_distance) +
             ", M=120: " + format_double(rep120.max_distance));
}

// 12. explicit eigenfunction residuals
void criterion12() {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> kdist(1, 5);
  std::uniform_int_distribution<int> jdist(0, 9);
  double worst = 0.0;
  const auto int_profile = FieldProfile::linear(Rational(1, 4), Rational(0, 1));
  const auto gen_profile = FieldProfile::linear(Rational(2, 5), 0.123);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ra = proposition1_residual(kdist(rng), Prop1Case::IntegerFlux,
                                          4LL * jdist(rng), int_profile, 0.8);
    const auto rb = proposition1_residual(kdist(rng), Prop1Case::GenericFlux,
                                          jdist(rng), gen_profile, -1.1);
    for (const auto& r : {ra, rb})
      worst = std::max({worst, r.continuity, r.flux_balance, r.ode});
  }
  report(12, "explicit eigenfunction residuals vanish in both cases", worst <= 1e-12,
         "max residual " + format_double(worst));
}

// 13. box-dimension calibration and monotonicity
void criterion13() {
  const std::vector<double> scales{0.1, 0.0316227766, 0.01, 0.00316227766, 0.001};
  BandSet interval;
  interval.bands = {{-4.0, 4.0}};
  const double d_int = box_dimension_estimate(interval, scales).dimension;
  BandSet pts;
  pts.kind = SpectrumKind::Points;
  pts.points = {-2.0, 0.0, 1.5, 3.0};
  const double d_pts = box_dimension_estimate(pts, scales).dimension;
  const double d5 = box_dimension_estimate(discrete_spectrum(Rational(3, 5), 0.123),
                                           scales).dimension;
  const double d21 = box_dimension_estimate(discrete_spectrum(Rational(13, 21), 0.123),
                                            scales).dimension;
  const bool ok = std::abs(d_int - 1.0) <= 0.05 && std::abs(d_pts) <= 0.05 && d21 < d5;
  report(13, "box-dimension estimator calibration and convergent comparison", ok,
         "interval " + format_double(d_int) + ", points " + format_double(d_pts) +
             ", q5 " + format_double(d5) + ", q21 " + format_double(d21));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  std::printf("%d of 13 criteria passed\n", 13 - failures);
  return failures;
}
