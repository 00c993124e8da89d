#include "magchain/spectrum_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace magchain {

double BandSet::total_length() const {
  double s = 0.0;
  for (const auto& b : bands) s += b.length();
  return s;
}

double BandSet::lo() const {
  if (kind == SpectrumKind::Bands) {
    if (bands.empty()) throw std::logic_error("empty band set");
    return bands.front().lo;
  }
  if (points.empty()) throw std::logic_error("empty point set");
  return points.front();
}

double BandSet::hi() const {
  if (kind == SpectrumKind::Bands) {
    if (bands.empty()) throw std::logic_error("empty band set");
    return bands.back().hi;
  }
  if (points.empty()) throw std::logic_error("empty point set");
  return points.back();
}

double distance_to(const BandSet& s, double x) {
  double best = std::numeric_limits<double>::infinity();
  if (s.kind == SpectrumKind::Bands) {
    for (const auto& b : s.bands) {
      if (x >= b.lo && x <= b.hi) return 0.0;
      best = std::min(best, std::min(std::abs(x - b.lo), std::abs(x - b.hi)));
    }
  } else {
    for (double p : s.points) best = std::min(best, std::abs(x - p));
  }
  return best;
}

namespace {

// sup over x in a of dist(x, b); extrema sit at endpoints of a or at
// midpoints of b's complementary gaps clamped into a.
double directed_hausdorff(const BandSet& a, const BandSet& b) {
  std::vector<double> candidates;
  auto add_from_set = [&candidates](const BandSet& s) {
    if (s.kind == SpectrumKind::Bands) {
      for (const auto& iv : s.bands) {
        candidates.push_back(iv.lo);
        candidates.push_back(iv.hi);
      }
    } else {
      for (double p : s.points) candidates.push_back(p);
    }
  };
  add_from_set(a);
  // midpoints between consecutive components of b
  std::vector<double> b_edges;
  if (b.kind == SpectrumKind::Bands) {
    for (const auto& iv : b.bands) {
      b_edges.push_back(iv.lo);
      b_edges.push_back(iv.hi);
    }
  } else {
    for (double p : b.points) {
      b_edges.push_back(p);
      b_edges.push_back(p);
    }
  }
  for (size_t i = 2; i < b_edges.size(); i += 2) {
    double mid = 0.5 * (b_edges[i - 1] + b_edges[i]);
    if (distance_to(a, mid) == 0.0) candidates.push_back(mid);
  }
  double worst = 0.0;
  for (double x : candidates)
    if (distance_to(a, x) == 0.0) worst = std::max(worst, distance_to(b, x));
  return worst;
}

}  // namespace

double hausdorff_distance(const BandSet& a, const BandSet& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace magchain
