#include "magchain/floquet.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "magchain/errors.hpp"
#include "magchain/jacobi.hpp"

namespace magchain {

namespace {

// First q coefficients of the window; throws unless the window carries a
// period and covers at least one of it.
std::vector<double> period_coefficients(const CoefficientWindow& window) {
  if (!window.period) throw std::invalid_argument("window carries no period");
  const int q = *window.period;
  if (static_cast<int>(window.a.size()) < q)
    throw std::invalid_argument("window shorter than one period");
  return std::vector<double>(window.a.begin(), window.a.begin() + q);
}

bool has_zero(const std::vector<double>& a) {
  for (double x : a)
    if (x == 0.0) return true;
  return false;
}

struct Mat2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
};

Mat2 mul(const Mat2& A, const Mat2& B) {
  return {A.m00 * B.m00 + A.m01 * B.m10, A.m00 * B.m01 + A.m01 * B.m11,
          A.m10 * B.m00 + A.m11 * B.m10, A.m10 * B.m01 + A.m11 * B.m11};
}

Mat2 add(const Mat2& A, const Mat2& B) {
  return {A.m00 + B.m00, A.m01 + B.m01, A.m10 + B.m10, A.m11 + B.m11};
}

// Monodromy and (optionally) its lambda-derivative via product-rule
// propagation; a must be zero-free.
void monodromy_impl(const std::vector<double>& a, double lambda, Mat2* M, Mat2* Mp) {
  const int q = static_cast<int>(a.size());
  *M = Mat2{};
  if (Mp) *Mp = Mat2{0, 0, 0, 0};
  for (int j = 0; j < q; ++j) {
    const double aj = a[static_cast<size_t>(j)];
    const double ajm1 = a[static_cast<size_t>((j - 1 + q) % q)];
    Mat2 T{lambda / aj, -ajm1 / aj, 1.0, 0.0};
    if (Mp) {
      Mat2 Tp{1.0 / aj, 0.0, 0.0, 0.0};
      *Mp = add(mul(Tp, *M), mul(T, *Mp));
    }
    *M = mul(T, *M);
  }
}

double disc(const std::vector<double>& a, double lambda, double* deriv = nullptr) {
  Mat2 M, Mp;
  monodromy_impl(a, lambda, &M, deriv ? &Mp : nullptr);
  if (deriv) *deriv = Mp.m00 + Mp.m11;
  return M.m00 + M.m11;
}

double bisect_level(const std::vector<double>& a, double level, double x0, double x1,
                    double f0, double f1) {
  // f(x) = disc(x) - level; f0, f1 already computed, opposite signs
  for (int it = 0; it < 200 && x1 - x0 > 1e-12 * std::max(1.0, std::abs(x0)); ++it) {
    const double xm = 0.5 * (x0 + x1);
    const double fm = disc(a, xm) - level;
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

}  // namespace

TransferMatrix monodromy(const CoefficientWindow& window, double lambda) {
  const auto a = period_coefficients(window);
  if (has_zero(a))
    throw std::invalid_argument("monodromy: zero coefficient inside period; use the block path");
  Mat2 M;
  monodromy_impl(a, lambda, &M, nullptr);
  TransferMatrix T;
  T.m00 = M.m00;
  T.m01 = M.m01;
  T.m10 = M.m10;
  T.m11 = M.m11;
  T.j = window.j_lo;
  return T;
}

double discriminant(const CoefficientWindow& window, double lambda, double* deriv) {
  const auto a = period_coefficients(window);
  if (has_zero(a))
    throw std::invalid_argument("discriminant: zero coefficient inside period");
  return disc(a, lambda, deriv);
}

BandSet bands_nondegenerate(const CoefficientWindow& window) {
  const auto a = period_coefficients(window);
  if (has_zero(a))
    throw std::invalid_argument("bands_nondegenerate: zero coefficient inside period");
  const int q = static_cast<int>(a.size());
  const double B = norm_bound(window);
  const double lo = -B - 0.5, hi = B + 0.5;

  // Critical points of the discriminant: q-1 simple real roots of D', all
  // inside the spectral hull. Adaptive grid until every root is isolated.
  std::vector<double> crit;
  if (q > 1) {
    int m = std::max(64, 16 * q);
    std::vector<std::pair<double, double>> brackets;
    while (true) {
      brackets.clear();
      double prev_x = lo, prev_d;
      disc(a, prev_x, &prev_d);
      for (int i = 1; i <= m; ++i) {
        const double x = lo + (hi - lo) * i / m;
        double d;
        disc(a, x, &d);
        if ((d < 0) != (prev_d < 0)) brackets.emplace_back(prev_x, x);
        prev_x = x;
        prev_d = d;
      }
      if (static_cast<int>(brackets.size()) == q - 1) break;
      m *= 2;
      if (m > (1 << 24))
        throw bracketing_error("bands_nondegenerate: could not isolate all discriminant extrema");
    }
    for (auto [x0, x1] : brackets) {
      double d0;
      disc(a, x0, &d0);
      while (x1 - x0 > 1e-13 * std::max(1.0, std::abs(x0))) {
        const double xm = 0.5 * (x0 + x1);
        double dm;
        disc(a, xm, &dm);
        if ((dm < 0) == (d0 < 0)) {
          x0 = xm;
          d0 = dm;
        } else {
          x1 = xm;
        }
      }
      crit.push_back(0.5 * (x0 + x1));
    }
  }

  // Monotone pieces between consecutive critical points; each piece crosses
  // both levels +2 and -2 exactly once, bounding one band.
  std::vector<double> knots;
  knots.push_back(lo);
  knots.insert(knots.end(), crit.begin(), crit.end());
  knots.push_back(hi);

  const double touch_tol = 1e-9;
  BandSet out;
  out.kind = SpectrumKind::Bands;
  out.period = q;
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    const double x0 = knots[i], x1 = knots[i + 1];
    const double D0 = disc(a, x0), D1 = disc(a, x1);
    double edges[2];
    int filled = 0;
    for (double level : {2.0, -2.0}) {
      const double f0 = D0 - level, f1 = D1 - level;
      double root;
      if ((f0 < 0) != (f1 < 0)) {
        root = bisect_level(a, level, x0, x1, f0, f1);
      } else if (std::abs(f0) <= touch_tol) {
        root = x0;  // tangency shared with the previous piece
      } else if (std::abs(f1) <= touch_tol) {
        root = x1;
      } else {
        throw bracketing_error("bands_nondegenerate: discriminant level not bracketed");
      }
      edges[filled++] = root;
    }
    Interval band{std::min(edges[0], edges[1]), std::max(edges[0], edges[1])};
    out.bands.push_back(band);
  }
  std::sort(out.bands.begin(), out.bands.end(),
            [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
  if (static_cast<int>(out.bands.size()) != q)
    throw bracketing_error("bands_nondegenerate: band count mismatch");
  return out;
}

BandSet bands_bloch_oracle(const CoefficientWindow& window, int n_kappa) {
  const auto a = period_coefficients(window);
  if (has_zero(a))
    throw std::invalid_argument("bands_bloch_oracle: zero coefficient inside period");
  if (n_kappa < 2) throw std::invalid_argument("bands_bloch_oracle: n_kappa must be >= 2");
  const int q = static_cast<int>(a.size());

  BandSet out;
  out.kind = SpectrumKind::Bands;
  out.period = q;
  std::vector<double> band_lo(static_cast<size_t>(q), 1e300);
  std::vector<double> band_hi(static_cast<size_t>(q), -1e300);

  Eigen::MatrixXcd H(q, q);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  for (int ik = 0; ik < n_kappa; ++ik) {
    const double kappa = M_PI * ik / (n_kappa - 1);
    const std::complex<double> up = std::polar(1.0, kappa);
    H.setZero();
    for (int j = 0; j < q; ++j) {
      const double aj = a[static_cast<size_t>(j)];
      const int nxt = (j + 1) % q;
      const std::complex<double> phase = (nxt == j + 1) ? 1.0 : up;
      // forward hopping a_j from site j to j+1 (wrap carries e^{i kappa})
      H(nxt, j) += aj * phase;
      H(j, nxt) += aj * std::conj(phase);
    }
    solver.compute(H, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    for (int b = 0; b < q; ++b) {
      band_lo[static_cast<size_t>(b)] = std::min(band_lo[static_cast<size_t>(b)], ev[b]);
      band_hi[static_cast<size_t>(b)] = std::max(band_hi[static_cast<size_t>(b)], ev[b]);
    }
  }
  for (int b = 0; b < q; ++b)
    out.bands.push_back({band_lo[static_cast<size_t>(b)], band_hi[static_cast<size_t>(b)]});
  return out;
}

BandSet blocks_degenerate(const CoefficientWindow& window) {
  if (!window.period) throw std::invalid_argument("blocks_degenerate: window carries no period");
  const int q = *window.period;
  if (static_cast<int>(window.a.size()) < q)
    throw std::invalid_argument("blocks_degenerate: window shorter than one period");
  std::vector<int> zeros;  // offsets within [0, q)
  for (int j = 0; j < q; ++j)
    if (window.a[static_cast<size_t>(j)] == 0.0) zeros.push_back(j);
  if (zeros.empty())
    throw std::invalid_argument("blocks_degenerate: no zero coefficient inside period");

  // periodic extension: blocks live between cyclically consecutive zeros
  auto coeff = [&](long long j) {
    long long r = j % q;
    if (r < 0) r += q;
    return window.a[static_cast<size_t>(r)];
  };

  std::vector<double> pts;
  const int m = static_cast<int>(zeros.size());
  for (int i = 0; i < m; ++i) {
    const long long zj = zeros[static_cast<size_t>(i)];
    const long long zk = (i + 1 < m) ? zeros[static_cast<size_t>(i + 1)] : zeros[0] + q;
    const int dim = static_cast<int>(zk - zj);  // sites zj+1 .. zk
    TruncatedJacobi blk;
    blk.dim = dim;
    for (long long j = zj + 1; j < zk; ++j) {
      const double c = coeff(j);
      if (c == 0.0)
        throw std::logic_error("blocks_degenerate: misclassified zero inside block");
      blk.off_diagonal.push_back(c);
    }
    const auto ev = eigenvalues(blk);
    pts.insert(pts.end(), ev.begin(), ev.end());
  }
  std::sort(pts.begin(), pts.end());
  BandSet out;
  out.kind = SpectrumKind::Points;
  out.period = q;
  for (double p : pts)
    if (out.points.empty() || p - out.points.back() > 1e-9) out.points.push_back(p);
  return out;
}

}  // namespace magchain
