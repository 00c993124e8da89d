#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "magchain/eta_map.hpp"
#include "magchain/field_profile.hpp"
#include "magchain/spectrum_set.hpp"

namespace magchain {

/// Per-branch piece sigma_n of the graph spectrum, in graph-energy
/// coordinates; intervals for the band case, points for the degenerate case.
struct BranchPart {
  int n = 0;
  SpectrumKind kind = SpectrumKind::Bands;
  std::vector<Interval> intervals;
  std::vector<double> points;
  double min() const;
  double max() const;
};

struct SpectralGap {
  double lo = 0.0;
  double hi = 0.0;
  bool touching = false;  // closed within 1e-9; reported, never merged
  double length() const { return hi - lo; }
};

/// sigma(-Delta_{gamma,A}) assembled from the Dirichlet point set and the
/// eta-preimages of the discrete spectrum.
struct GraphSpectrum {
  double gamma = 0.0;
  std::string profile_description;
  BandSet discrete;                      // sigma(L_A) in discrete coordinates
  std::vector<double> dirichlet_points;  // n^2, 1 <= n <= n_max
  std::vector<BranchPart> parts;         // sigma_n, n = 0..n_max
  std::vector<BranchInterval> branches;  // the I_n catalogue used
  std::vector<SpectralGap> gaps;         // between consecutive parts

  /// Distance to the union of all parts and Dirichlet points; *branch
  /// receives the branch index attaining it (-1 for a Dirichlet point).
  double distance(double z, int* branch = nullptr) const;
};

GraphSpectrum assemble(const FieldProfile& profile, double gamma, int n_max);

double total_measure(const BandSet& s);
double total_measure(const GraphSpectrum& s);

struct BoxDimensionFit {
  double dimension = 0.0;
  double residual = 0.0;  // rms residual of the log-log fit
};

/// Least-squares slope of log(box count) against log(1/width).
/// Needs >= 4 scales spanning >= 2 decades.
BoxDimensionFit box_dimension_estimate(const BandSet& s, const std::vector<double>& scales);

enum class Coordinates { Discrete, Graph };

struct ButterflyRow {
  long long p = 0;
  long long q = 1;
  double theta = 0.0;
  int n = 0;  // band index (discrete) or branch index (graph)
  double lo = 0.0;
  double hi = 0.0;
  SpectrumKind kind = SpectrumKind::Bands;
};

struct ButterflyTable {
  std::vector<ButterflyRow> rows;
};

/// Spectrum sweep over all reduced p/q in [0, 1] with q <= q_max.
/// theta_sweep > 1 unions that many uniform theta values.
ButterflyTable butterfly(int q_max, double theta, double gamma, Coordinates coords,
                         int n_max, int theta_sweep = 1);

/// Continued-fraction convergents p_k/q_k of the golden mean (sqrt5-1)/2
/// with q_k >= 2, depth entries: q = 2, 3, 5, 8, 13, 21, ...
std::vector<Rational> golden_convergents(int depth);

// CSV emission, 12 significant digits, fixed column order.
void write_bands_csv(std::ostream& os, const GraphSpectrum& s);
void write_butterfly_csv(std::ostream& os, const ButterflyTable& t);
struct MeasureRow {
  long long p = 0;
  long long q = 1;
  double total_measure = 0.0;
  double box_dimension = 0.0;
};
void write_measure_csv(std::ostream& os, const std::vector<MeasureRow>& rows);
std::string format_double(double x);

}  // namespace magchain
