#include "magchain/graph_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "magchain/floquet.hpp"
#include "magchain/jacobi.hpp"

namespace magchain {

double BranchPart::min() const {
  if (kind == SpectrumKind::Bands) {
    if (intervals.empty()) throw std::logic_error("empty branch part");
    return intervals.front().lo;
  }
  if (points.empty()) throw std::logic_error("empty branch part");
  return points.front();
}

double BranchPart::max() const {
  if (kind == SpectrumKind::Bands) {
    if (intervals.empty()) throw std::logic_error("empty branch part");
    return intervals.back().hi;
  }
  if (points.empty()) throw std::logic_error("empty branch part");
  return points.back();
}

double GraphSpectrum::distance(double z, int* branch) const {
  double best = std::numeric_limits<double>::infinity();
  int who = -1;
  for (double d : dirichlet_points) {
    const double dist = std::abs(z - d);
    if (dist < best) {
      best = dist;
      who = -1;
    }
  }
  for (const auto& part : parts) {
    double dist = std::numeric_limits<double>::infinity();
    if (part.kind == SpectrumKind::Bands) {
      for (const auto& iv : part.intervals) {
        if (z >= iv.lo && z <= iv.hi) {
          dist = 0.0;
          break;
        }
        dist = std::min(dist, std::min(std::abs(z - iv.lo), std::abs(z - iv.hi)));
      }
    } else {
      for (double p : part.points) dist = std::min(dist, std::abs(z - p));
    }
    if (dist < best) {
      best = dist;
      who = part.n;
    }
  }
  if (branch) *branch = who;
  return best;
}

namespace {

std::string describe(const FieldProfile& profile) {
  std::ostringstream os;
  switch (profile.kind()) {
    case FieldProfile::Kind::Linear:
      if (auto a = profile.alpha_rational())
        os << "linear alpha=" << a->num << "/" << a->den;
      else
        os << "linear alpha=" << profile.alpha();
      if (auto t = profile.theta_rational())
        os << " theta=" << t->num << "/" << t->den;
      else
        os << " theta=" << profile.theta();
      break;
    case FieldProfile::Kind::PeriodicList:
      os << "periodic N=" << profile.values().size();
      break;
    case FieldProfile::Kind::Explicit:
      os << "explicit window";
      break;
  }
  return os.str();
}

}  // namespace

GraphSpectrum assemble(const FieldProfile& profile, double gamma, int n_max) {
  const auto q_opt = profile.period();
  if (!q_opt)
    throw std::invalid_argument("assemble: profile must be rational-periodic");
  const int q = *q_opt;
  const auto window = profile.evaluate(0, q - 1);

  GraphSpectrum gs;
  gs.gamma = gamma;
  gs.profile_description = describe(profile);
  gs.discrete = window.zero_positions.empty() ? bands_nondegenerate(window)
                                              : blocks_degenerate(window);

  const EtaMap eta(gamma);
  gs.branches = eta.branch_intervals(n_max);
  for (const auto& br : gs.branches) {
    BranchPart part;
    part.n = br.n;
    part.kind = gs.discrete.kind;
    if (gs.discrete.kind == SpectrumKind::Bands) {
      for (const auto& band : gs.discrete.bands) {
        const double z1 = eta.preimage_on_branch(br, band.lo);
        const double z2 = eta.preimage_on_branch(br, band.hi);
        part.intervals.push_back({std::min(z1, z2), std::max(z1, z2)});
      }
      std::sort(part.intervals.begin(), part.intervals.end(),
                [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
    } else {
      for (double lam : gs.discrete.points)
        part.points.push_back(eta.preimage_on_branch(br, lam));
      std::sort(part.points.begin(), part.points.end());
    }
    gs.parts.push_back(std::move(part));
  }

  for (int n = 1; n <= n_max; ++n)
    gs.dirichlet_points.push_back(static_cast<double>(n) * n);

  for (size_t i = 1; i < gs.parts.size(); ++i) {
    SpectralGap gap;
    gap.lo = gs.parts[i - 1].max();
    gap.hi = gs.parts[i].min();
    gap.touching = gap.hi - gap.lo <= 1e-9;
    gs.gaps.push_back(gap);
  }
  return gs;
}

double total_measure(const BandSet& s) {
  if (s.kind == SpectrumKind::Points) return 0.0;
  return s.total_length();
}

double total_measure(const GraphSpectrum& s) {
  double sum = 0.0;
  for (const auto& part : s.parts)
    if (part.kind == SpectrumKind::Bands)
      for (const auto& iv : part.intervals) sum += iv.length();
  return sum;
}

namespace {

long long count_boxes(const BandSet& s, double w) {
  std::set<long long> cells;
  if (s.kind == SpectrumKind::Bands) {
    for (const auto& iv : s.bands) {
      const long long c0 = static_cast<long long>(std::floor(iv.lo / w));
      const long long c1 = static_cast<long long>(std::floor(iv.hi / w));
      for (long long c = c0; c <= c1; ++c) cells.insert(c);
    }
  } else {
    for (double p : s.points) cells.insert(static_cast<long long>(std::floor(p / w)));
  }
  return static_cast<long long>(cells.size());
}

}  // namespace

BoxDimensionFit box_dimension_estimate(const BandSet& s, const std::vector<double>& scales) {
  if (scales.size() < 4)
    throw std::invalid_argument("box_dimension_estimate: need at least 4 scales");
  const auto [mn, mx] = std::minmax_element(scales.begin(), scales.end());
  if (*mx / *mn < 100.0)
    throw std::invalid_argument("box_dimension_estimate: scales must span >= 2 decades");

  std::vector<double> xs, ys;
  for (double w : scales) {
    if (w <= 0) throw std::invalid_argument("box_dimension_estimate: non-positive scale");
    const long long c = count_boxes(s, w);
    if (c <= 0) throw std::invalid_argument("box_dimension_estimate: empty set");
    xs.push_back(std::log(1.0 / w));
    ys.push_back(std::log(static_cast<double>(c)));
  }
  const size_t m = xs.size();
  const double xbar = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
  const double ybar = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  BoxDimensionFit fit;
  fit.dimension = sxy / sxx;
  const double intercept = ybar - fit.dimension * xbar;
  double ss = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const double r = ys[i] - (intercept + fit.dimension * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

std::vector<Rational> golden_convergents(int depth) {
  // golden mean has continued fraction [0; 1, 1, 1, ...]; skip q = 1
  std::vector<Rational> out;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 1;
  while (static_cast<int>(out.size()) < depth) {
    const long long p2 = p1 + p0, q2 = q1 + q0;
    out.emplace_back(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return out;
}

ButterflyTable butterfly(int q_max, double theta, double gamma, Coordinates coords,
                         int n_max, int theta_sweep) {
  if (q_max < 1) throw std::invalid_argument("butterfly: q_max must be >= 1");
  if (theta_sweep < 1) throw std::invalid_argument("butterfly: theta_sweep must be >= 1");

  std::vector<Rational> alphas;
  for (long long q = 1; q <= q_max; ++q)
    for (long long p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) alphas.emplace_back(p, q);
  std::sort(alphas.begin(), alphas.end(), [](const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  });

  std::vector<double> thetas;
  if (theta_sweep == 1) {
    thetas.push_back(theta);
  } else {
    for (int i = 0; i < theta_sweep; ++i)
      thetas.push_back(static_cast<double>(i) / theta_sweep);
  }

  ButterflyTable table;
  for (const auto& alpha : alphas) {
    for (double th : thetas) {
      const auto profile = FieldProfile::linear(alpha, th);
      if (coords == Coordinates::Discrete) {
        const auto window = profile.evaluate(0, alpha.den - 1);
        const BandSet s = window.zero_positions.empty() ? bands_nondegenerate(window)
                                                        : blocks_degenerate(window);
        if (s.kind == SpectrumKind::Bands) {
          for (size_t b = 0; b < s.bands.size(); ++b)
            table.rows.push_back({alpha.num, alpha.den, th, static_cast<int>(b),
                                  s.bands[b].lo, s.bands[b].hi, SpectrumKind::Bands});
        } else {
          for (size_t b = 0; b < s.points.size(); ++b)
            table.rows.push_back({alpha.num, alpha.den, th, static_cast<int>(b),
                                  s.points[b], s.points[b], SpectrumKind::Points});
        }
      } else {
        const auto gs = assemble(profile, gamma, n_max);
        for (const auto& part : gs.parts) {
          if (part.kind == SpectrumKind::Bands) {
            for (const auto& iv : part.intervals)
              table.rows.push_back({alpha.num, alpha.den, th, part.n, iv.lo, iv.hi,
                                    SpectrumKind::Bands});
          } else {
            for (double z : part.points)
              table.rows.push_back({alpha.num, alpha.den, th, part.n, z, z,
                                    SpectrumKind::Points});
          }
        }
      }
    }
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ButterflyRow& a, const ButterflyRow& b) {
                     const double fa = static_cast<double>(a.p) / a.q;
                     const double fb = static_cast<double>(b.p) / b.q;
                     if (fa != fb) return fa < fb;
                     if (a.theta != b.theta) return a.theta < b.theta;
                     if (a.n != b.n) return a.n < b.n;
                     return a.lo < b.lo;
                   });
  return table;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_bands_csv(std::ostream& os, const GraphSpectrum& s) {
  os << "n,kind,lo,hi\n";
  for (const auto& part : s.parts) {
    if (part.kind == SpectrumKind::Bands) {
      for (const auto& iv : part.intervals)
        os << part.n << ",band," << format_double(iv.lo) << "," << format_double(iv.hi)
           << "\n";
    } else {
      for (double z : part.points)
        os << part.n << ",point," << format_double(z) << "," << format_double(z) << "\n";
    }
  }
}

void write_butterfly_csv(std::ostream& os, const ButterflyTable& t) {
  os << "p,q,theta,n,lo,hi,kind\n";
  for (const auto& r : t.rows)
    os << r.p << "," << r.q << "," << format_double(r.theta) << "," << r.n << ","
       << format_double(r.lo) << "," << format_double(r.hi) << ","
       << (r.kind == SpectrumKind::Bands ? "band" : "point") << "\n";
}

void write_measure_csv(std::ostream& os, const std::vector<MeasureRow>& rows) {
  os << "p,q,total_measure,box_dimension\n";
  for (const auto& r : rows)
    os << r.p << "," << r.q << "," << format_double(r.total_measure) << ","
       << format_double(r.box_dimension) << "\n";
}

}  // namespace magchain
