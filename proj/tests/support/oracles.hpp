#pragma once

// Independent oracles for test assertions.  Everything here recomputes the
// quantity under test from its definition, by a route separate from the
// library implementation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gridkit/image.hpp"
#include "gridkit/psf_config.hpp"
#include "gridkit/sample_set.hpp"
#include "quadrature.hpp"

namespace testsupport {

inline constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Simplex projection: enumerate candidate active sets by sorted prefix size,
// build the exact minimizer for each, keep the feasible candidate with the
// smallest distance to v.
inline std::vector<double> project_simplex_oracle(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  std::vector<double> best;
  long double best_dist = std::numeric_limits<long double>::infinity();
  long double prefix = 0.0L;
  for (std::size_t rho = 1; rho <= n; ++rho) {
    prefix += sorted[rho - 1];
    const long double tau = (prefix - 1.0L) / static_cast<long double>(rho);
    std::vector<double> cand(n);
    long double dist = 0.0L;
    bool feasible = true;
    for (std::size_t i = 0; i < n; ++i) {
      const long double u = static_cast<long double>(v[i]) - tau;
      cand[i] = static_cast<double>(std::max(0.0L, u));
      const long double diff = cand[i] - static_cast<long double>(v[i]);
      dist += diff * diff;
    }
    // The candidate must actually sum to 1 (within roundoff) to be feasible.
    long double sum = 0.0L;
    for (double c : cand) sum += c;
    feasible = std::abs(sum - 1.0L) < 1e-9L;
    if (feasible && dist < best_dist) {
      best_dist = dist;
      best = std::move(cand);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Convex QP over the probability simplex: min 0.5 w'Aw s.t. w >= 0, 1'w = 1.
// Enumerates all support sets (n <= ~16), solves the equality-constrained
// problem on each, and returns the smallest objective among primal-feasible
// candidates.  Exact for a PSD A whenever the optimal support's system is
// solvable, which holds for generic instances.
inline double simplex_qp_oracle(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sup;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sup.push_back(i);
    const int k = static_cast<int>(sup.size());

    Eigen::MatrixXd kkt(k + 1, k + 1);
    kkt.setZero();
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) kkt(r, c) = a(sup[r], sup[c]);
    for (int r = 0; r < k; ++r) {
      kkt(r, k) = -1.0;  // -lambda column
      kkt(k, r) = 1.0;
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    Eigen::VectorXd sol = lu.solve(rhs);
    if ((kkt * sol - rhs).norm() > 1e-8) continue;  // singular support system

    bool feasible = true;
    for (int r = 0; r < k; ++r)
      if (sol(r) < -1e-12) feasible = false;
    if (!feasible) continue;

    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (int r = 0; r < k; ++r) w(sup[r]) = std::max(0.0, sol(r));
    best = std::min(best, 0.5 * w.dot(a * w));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Direct centered inverse DFT per definition (O(N^2) double loop):
// out[n] = (1/WH) sum_m in[m] e^{+i2pi ((mx-W/2)(nx-W/2)/W + (my-H/2)(ny-H/2)/H)}.
inline gridkit::ComplexImage direct_centered_idft(const gridkit::ComplexImage& in) {
  gridkit::ComplexImage out(in.width, in.height);
  const double scale = 1.0 / (static_cast<double>(in.width) * in.height);
  for (int ny = 0; ny < in.height; ++ny)
    for (int nx = 0; nx < in.width; ++nx) {
      std::complex<double> acc{0.0, 0.0};
      for (int my = 0; my < in.height; ++my)
        for (int mx = 0; mx < in.width; ++mx) {
          const double phase =
              2.0 * kPi * ((mx - in.width / 2) * static_cast<double>(nx - in.width / 2) / in.width +
                           (my - in.height / 2) * static_cast<double>(ny - in.height / 2) / in.height);
          acc += in.at(mx, my) * std::complex<double>(std::cos(phase), std::sin(phase));
        }
      out.at(nx, ny) = scale * acc;
    }
  return out;
}

// Plain (zero-based) inverse DFT per definition, 1/N convention.
inline std::vector<std::complex<double>> direct_idft_1d(
    std::span<const std::complex<double>> v) {
  const std::size_t n = v.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) {
      const double phase = 2.0 * kPi * static_cast<double>(m) * static_cast<double>(i) /
                           static_cast<double>(n);
      acc += v[m] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    out[i] = acc / static_cast<double>(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gradient-matrix entry by adaptive quadrature of the defining per-axis
// integrals: 2 * Re prod_d Int_{-N_d}^{N_d} e^{i nu_d x - |x|/gamma_d} dx,
// each axis split at the kink.
inline double gradient_entry_quadrature(std::span<const double> kj, std::span<const double> kl,
                                        const gridkit::PsfConfig& cfg, double rel_tol = 1e-11) {
  std::complex<double> prod{1.0, 0.0};
  for (std::size_t d = 0; d < kj.size(); ++d) {
    const double nu = 2.0 * kPi * (kl[d] - kj[d]);
    const double g = cfg.gamma[d];
    const double n = cfg.half_fov[d];
    auto f = [&](double x) {
      return std::exp(std::complex<double>(-std::abs(x) / g, nu * x));
    };
    QuadOptions opt;
    opt.rel_tol = rel_tol;
    const auto left = adaptive_quad<std::complex<double>>(f, -n, 0.0, opt);
    const auto right = adaptive_quad<std::complex<double>>(f, 0.0, n, opt);
    prod *= left + right;
  }
  return 2.0 * prod.real();
}

// Full tensor 2-D quadrature of 2 Int cos(2pi dk.x) e^{-sum |x_d|/gamma_d} dx
// over [-N1,N1] x [-N2,N2], quadrant by quadrant (smooth integrands).
inline double gradient_entry_quadrature_2d(std::span<const double> kj,
                                           std::span<const double> kl,
                                           const gridkit::PsfConfig& cfg,
                                           double rel_tol = 1e-9) {
  const double dk0 = kj[0] - kl[0];
  const double dk1 = kj[1] - kl[1];
  auto f = [&](double x, double y) {
    return std::cos(2.0 * kPi * (dk0 * x + dk1 * y)) *
           std::exp(-std::abs(x) / cfg.gamma[0] - std::abs(y) / cfg.gamma[1]);
  };
  QuadOptions opt;
  opt.rel_tol = rel_tol;
  const double n0 = cfg.half_fov[0], n1 = cfg.half_fov[1];
  double total = 0.0;
  total += adaptive_quad_2d<double>(f, -n0, 0.0, -n1, 0.0, opt);
  total += adaptive_quad_2d<double>(f, 0.0, n0, -n1, 0.0, opt);
  total += adaptive_quad_2d<double>(f, -n0, 0.0, 0.0, n1, opt);
  total += adaptive_quad_2d<double>(f, 0.0, n0, 0.0, n1, opt);
  return 2.0 * total;
}

// ---------------------------------------------------------------------------
// Straightforward extended-precision two-pass MSE.
inline double mse_oracle(const gridkit::RealImage& a, const gridkit::RealImage& b) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const long double d = static_cast<long double>(a.data[i]) - b.data[i];
    acc += d * d;
  }
  return static_cast<double>(acc / static_cast<long double>(a.data.size()));
}

// Literal sliding-window SSIM in long double, recomputed per window from the
// definition.
inline double ssim_oracle(const gridkit::RealImage& a, const gridkit::RealImage& b, int win,
                          double sigma, double k1, double k2, double range) {
  const int h = win / 2;
  std::vector<long double> g(static_cast<std::size_t>(win) * win);
  long double gsum = 0.0L;
  for (int dy = -h; dy <= h; ++dy)
    for (int dx = -h; dx <= h; ++dx) {
      const long double v = std::exp(-(dx * dx + dy * dy) / (2.0L * sigma * sigma));
      g[static_cast<std::size_t>(dy + h) * win + (dx + h)] = v;
      gsum += v;
    }
  for (auto& v : g) v /= gsum;

  const long double c1 = static_cast<long double>(k1 * range) * (k1 * range);
  const long double c2 = static_cast<long double>(k2 * range) * (k2 * range);

  long double total = 0.0L;
  int count = 0;
  for (int wy = 0; wy + win <= a.height; ++wy)
    for (int wx = 0; wx + win <= a.width; ++wx) {
      long double mu_a = 0.0L, mu_b = 0.0L;
      for (int dy = 0; dy < win; ++dy)
        for (int dx = 0; dx < win; ++dx) {
          const long double wgt = g[static_cast<std::size_t>(dy) * win + dx];
          mu_a += wgt * a.at(wx + dx, wy + dy);
          mu_b += wgt * b.at(wx + dx, wy + dy);
        }
      long double va = 0.0L, vb = 0.0L, cov = 0.0L;
      for (int dy = 0; dy < win; ++dy)
        for (int dx = 0; dx < win; ++dx) {
          const long double wgt = g[static_cast<std::size_t>(dy) * win + dx];
          const long double da = a.at(wx + dx, wy + dy) - mu_a;
          const long double db = b.at(wx + dx, wy + dy) - mu_b;
          va += wgt * da * da;
          vb += wgt * db * db;
          cov += wgt * da * db;
        }
      total += ((2.0L * mu_a * mu_b + c1) * (2.0L * cov + c2)) /
               ((mu_a * mu_a + mu_b * mu_b + c1) * (va + vb + c2));
      ++count;
    }
  return static_cast<double>(total / count);
}

}  // namespace testsupport
