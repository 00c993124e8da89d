#include "magchain/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace magchain {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

// index helpers: vertex j in [0, R]; edge point (ring r, side s, m in [1, M])
struct Indexer {
  int R, M;
  int vertex(int j) const { return j * (2 * M + 1); }
  int edge(int r, int side, int m) const {
    // side 0 = upper, 1 = lower; chain-ordered to keep the bandwidth at M+1
    return vertex(r) + 1 + side * M + (m - 1);
  }
  int dim() const { return (R + 1) + 2 * R * M; }
};

}  // namespace

DiscretizedChain assemble_fd(const FieldProfile& profile, double gamma, int R, int M) {
  if (R < 2 || M < 8) throw std::invalid_argument("assemble_fd: need R >= 2, M >= 8");
  const Indexer ix{R, M};
  const int n = ix.dim();
  const double h = kPi / (M + 1);

  DiscretizedChain chain;
  chain.rings = R;
  chain.points_per_edge = M;
  chain.gamma = gamma;
  chain.step = h;
  chain.vertex_scaling = 2.0 * h;

  // Stiffness-like Hermitian matrix K and diagonal weight D; the returned
  // operator is D^{-1/2} K D^{-1/2} so that the half-cell vertex balance
  // stays a plain (not generalized) eigenproblem.
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXd W(n);

  for (int j = 0; j <= R; ++j) {
    const int degree = (j == 0 || j == R) ? 2 : 4;
    K(ix.vertex(j), ix.vertex(j)) = degree / h + gamma;
    W(ix.vertex(j)) = degree * h / 2.0;
  }
  for (int r = 0; r < R; ++r) {
    const double A = profile.A(r);
    for (int side = 0; side < 2; ++side) {
      const double sgn = side == 0 ? 1.0 : -1.0;  // upper carries e^{+i pi A} at pi
      const cplx phase = std::polar(1.0, sgn * kPi * A);
      for (int m = 1; m <= M; ++m) {
        const int i = ix.edge(r, side, m);
        K(i, i) = 2.0 / h;
        W(i) = h;
        if (m > 1) {
          const int prev = ix.edge(r, side, m - 1);
          K(i, prev) = -1.0 / h;
          K(prev, i) = -1.0 / h;
        }
      }
      // x = 0 end: value equals the vertex value, no phase
      K(ix.edge(r, side, 1), ix.vertex(r)) = -1.0 / h;
      K(ix.vertex(r), ix.edge(r, side, 1)) = -1.0 / h;
      // x = pi end: psi(pi) = phase * vertex value at r+1
      K(ix.edge(r, side, M), ix.vertex(r + 1)) = -phase / h;
      K(ix.vertex(r + 1), ix.edge(r, side, M)) = -std::conj(phase) / h;
    }
  }

  Eigen::VectorXd winv = W.cwiseSqrt().cwiseInverse();
  chain.H = winv.asDiagonal() * K * winv.asDiagonal();
  return chain;
}

std::vector<double> fd_eigenvalues(const DiscretizedChain& chain, double e_max) {
  if (e_max <= 0) throw std::invalid_argument("fd_eigenvalues: e_max must be positive");
  const int n = static_cast<int>(chain.H.rows());
  const int kd = chain.points_per_edge + 1;  // bandwidth of the chain ordering

  // lower-band packed storage, column-major: ab(i - j, j) = H(i, j)
  std::vector<cplx> ab(static_cast<size_t>(kd + 1) * n, cplx(0.0));
  for (int j = 0; j < n; ++j)
    for (int i = j; i <= std::min(n - 1, j + kd); ++i)
      ab[static_cast<size_t>(j) * (kd + 1) + (i - j)] = chain.H(i, j);

  std::vector<double> w(static_cast<size_t>(n));
  const lapack_int info =
      LAPACKE_zhbev(LAPACK_COL_MAJOR, 'N', 'L', n, kd, ab.data(), kd + 1, w.data(),
                    nullptr, 1);
  if (info != 0) throw std::runtime_error("fd_eigenvalues: zhbev failed");

  std::vector<double> out;
  for (double e : w)
    if (e <= e_max) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport compare_to_prediction(const std::vector<double>& eigs,
                                         const GraphSpectrum& predicted, double tol) {
  if (tol <= 0) throw std::invalid_argument("compare_to_prediction: tol must be positive");
  if (eigs.empty()) throw std::invalid_argument("compare_to_prediction: no eigenvalues");
  VerificationReport rep;
  rep.n_eigs = static_cast<int>(eigs.size());
  double sum = 0.0;
  for (double e : eigs) {
    int branch = -1;
    const double d = predicted.distance(e, &branch);
    rep.max_distance = std::max(rep.max_distance, d);
    sum += d;
    rep.per_branch_counts[branch] += 1;
  }
  rep.mean_distance = sum / rep.n_eigs;
  rep.pass = rep.max_distance <= tol;
  return rep;
}

namespace {

// Piecewise eigenfunction: on ring l, psi = c0 * s(x; k^2) + cpi * s(x - pi; k^2)
// per side, with s(x; k^2) = sin(kx)/k.
struct RingComponent {
  cplx up_s0{0.0}, up_spi{0.0}, low_s0{0.0}, low_spi{0.0};
};

bool is_integer(const FieldProfile& profile, long long j, double tol = 1e-12) {
  if (profile.kind() == FieldProfile::Kind::Linear && profile.alpha_rational() &&
      profile.theta_rational()) {
    return ((*profile.alpha_rational() * j) + *profile.theta_rational()).is_integer();
  }
  const double A = profile.A(j);
  return std::abs(A - std::round(A)) <= tol;
}

}  // namespace

ResidualReport proposition1_residual(int k, Prop1Case which, long long j,
                                     const FieldProfile& profile, double gamma) {
  if (k < 1) throw std::invalid_argument("proposition1_residual: k must be a positive integer");
  if (which == Prop1Case::IntegerFlux) {
    if (!is_integer(profile, j))
      throw std::invalid_argument("IntegerFlux case requires A_j integer");
  } else {
    if (is_integer(profile, j - 1) || is_integer(profile, j))
      throw std::invalid_argument("GenericFlux case requires A_{j-1}, A_j non-integer");
  }

  std::map<long long, RingComponent> rings;
  if (which == Prop1Case::IntegerFlux) {
    rings[j] = {cplx(1.0), cplx(0.0), cplx(-1.0), cplx(0.0)};
  } else {
    const double Ajm1 = profile.A(j - 1);
    const double Aj = profile.A(j);
    const double sjm1 = std::sin(Ajm1 * kPi);
    const double sj = std::sin(Aj * kPi);
    const cplx ephase = std::polar(1.0, kPi * Aj);
    rings[j - 1] = {cplx(sj), cplx(0.0), cplx(-sj), cplx(0.0)};
    rings[j] = {cplx(0.0), -sjm1 * ephase, cplx(0.0), sjm1 * std::conj(ephase)};
  }

  const double k2 = static_cast<double>(k) * k;
  auto s_val = [&](double x) { return std::sin(k * x) / k; };
  auto s_der = [&](double x) { return std::cos(k * x); };
  auto s_dd = [&](double x) { return -static_cast<double>(k) * std::sin(k * x); };

  auto value = [&](long long l, int side, double x) -> cplx {
    auto it = rings.find(l);
    if (it == rings.end()) return 0.0;
    const auto& rc = it->second;
    const cplx c0 = side == 0 ? rc.up_s0 : rc.low_s0;
    const cplx cpi = side == 0 ? rc.up_spi : rc.low_spi;
    return c0 * s_val(x) + cpi * s_val(x - kPi);
  };
  auto deriv = [&](long long l, int side, double x) -> cplx {
    auto it = rings.find(l);
    if (it == rings.end()) return 0.0;
    const auto& rc = it->second;
    const cplx c0 = side == 0 ? rc.up_s0 : rc.low_s0;
    const cplx cpi = side == 0 ? rc.up_spi : rc.low_spi;
    return c0 * s_der(x) + cpi * s_der(x - kPi);
  };

  ResidualReport rep;
  for (long long v = j - 2; v <= j + 3; ++v) {
    const cplx phase = std::polar(1.0, kPi * profile.A(v - 1));
    const cplx vals[4] = {value(v, 0, 0.0), value(v, 1, 0.0),
                          std::conj(phase) * value(v - 1, 0, kPi),
                          phase * value(v - 1, 1, kPi)};
    for (int i = 1; i < 4; ++i)
      rep.continuity = std::max(rep.continuity, std::abs(vals[i] - vals[0]));
    const cplx balance = -std::conj(phase) * deriv(v - 1, 0, kPi) -
                         phase * deriv(v - 1, 1, kPi) + deriv(v, 0, 0.0) +
                         deriv(v, 1, 0.0) - gamma * vals[0];
    rep.flux_balance = std::max(rep.flux_balance, std::abs(balance));
  }
  for (const auto& [l, rc] : rings) {
    for (int side = 0; side < 2; ++side)
      for (int i = 1; i <= 8; ++i) {
        const double x = kPi * i / 9.0;
        const cplx c0 = side == 0 ? rc.up_s0 : rc.low_s0;
        const cplx cpi = side == 0 ? rc.up_spi : rc.low_spi;
        const cplx second = c0 * s_dd(x) + cpi * s_dd(x - kPi);
        const cplx resid = -second - k2 * value(l, side, x);
        rep.ode = std::max(rep.ode, std::abs(resid));
      }
  }
  return rep;
}

}  // namespace magchain
