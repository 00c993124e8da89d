#pragma once

#include <vector>

namespace magchain {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

enum class SpectrumKind { Bands, Points };

/// Canonical spectrum of a periodic discrete operator: either q closed
/// intervals (possibly touching at endpoints) or q flat eigenvalues of
/// infinite degeneracy.
struct BandSet {
  SpectrumKind kind = SpectrumKind::Bands;
  std::vector<Interval> bands;   // kind == Bands, sorted, disjoint interiors
  std::vector<double> points;    // kind == Points, sorted distinct
  int period = 1;

  double total_length() const;
  double lo() const;
  double hi() const;
};

/// Distance from x to the set (0 when inside an interval / at a point).
double distance_to(const BandSet& s, double x);

/// Hausdorff distance between two band sets viewed as closed subsets of R.
double hausdorff_distance(const BandSet& a, const BandSet& b);

}  // namespace magchain
