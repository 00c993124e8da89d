#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "magchain/field_profile.hpp"
#include "magchain/graph_spectrum.hpp"

namespace magchain {

/// Finite-difference discretization of the gauge-transformed chain-graph
/// Hamiltonian: R rings, M interior points per semicircle edge, delta
/// coupling gamma at the vertices. Magnetic phases enter only through the
/// vertex rows.
struct DiscretizedChain {
  int rings = 0;
  int points_per_edge = 0;
  double gamma = 0.0;
  double step = 0.0;            // h = pi / (M+1)
  double vertex_scaling = 0.0;  // interior-vertex row weight (2h) used to symmetrize
  Eigen::MatrixXcd H;           // Hermitian, dimension (R+1) + 2*R*M
};

DiscretizedChain assemble_fd(const FieldProfile& profile, double gamma, int R, int M);

/// All eigenvalues <= e_max, ascending. Backed by a banded Hermitian solver.
std::vector<double> fd_eigenvalues(const DiscretizedChain& chain, double e_max);

struct VerificationReport {
  double max_distance = 0.0;
  double mean_distance = 0.0;
  int n_eigs = 0;
  std::map<int, int> per_branch_counts;  // branch index, -1 = Dirichlet set
  bool pass = false;
};

VerificationReport compare_to_prediction(const std::vector<double>& eigs,
                                         const GraphSpectrum& predicted, double tol);

struct ResidualReport {
  double continuity = 0.0;    // vertex continuity chain, max norm
  double flux_balance = 0.0;  // delta-coupling derivative balance, max norm
  double ode = 0.0;           // -psi'' = k^2 psi at sampled interior points
};

enum class Prop1Case { IntegerFlux, GenericFlux };

/// Residuals of the explicit k^2 eigenfunctions on the supporting rings:
/// IntegerFlux requires A_j integer, GenericFlux requires A_{j-1}, A_j both
/// non-integer.
ResidualReport proposition1_residual(int k, Prop1Case which, long long j,
                                     const FieldProfile& profile, double gamma);

}  // namespace magchain
