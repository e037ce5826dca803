#include "gridkit/gp_solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gridkit/errors.hpp"
#include "gridkit/numeric.hpp"
#include "gridkit/power_iteration.hpp"
#include "gridkit/simplex.hpp"

namespace gridkit {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(std::span<const double> a, std::span<const double> b) {
  return fixed_block_dot(a, b);
}

}  // namespace

GpSolution solve_gp(const SampleSet& s, const PsfConfig& cfg, const GpOptions& opts) {
  const std::size_t m = s.size();
  GradientOperator op(s, cfg, opts.mode, opts.memory_budget_bytes);

  GpSolution sol;
  auto pw = power_iteration(
      [&](std::span<const double> v, std::span<double> out) { op.apply(v, out); }, m,
      /*tol=*/1e-6, /*max_iter=*/500, opts.seed);
  sol.operator_norm = pw.norm;
  sol.power_iteration_converged = pw.converged;

  std::vector<double> x(m, 1.0 / static_cast<double>(m));
  std::vector<double> ax(m);
  op.apply(x, ax);
  double f_x = 0.5 * dot(x, ax);

  double mu = pw.norm > 0 ? 1.0 / pw.norm : 1.0;
  const double mu_floor = mu * 1e-20;

  sol.trace.push_back({0, f_x, mu, false});
  if (opts.iterate_callback) opts.iterate_callback(x);

  if (m == 1) {  // the simplex is a single point
    sol.weights = DensityWeights{std::move(x), 1.0, DcfMethod::gp, "unscaled"};
    return sol;
  }

  std::vector<double> x_prev = x, ax_prev = ax;
  std::vector<double> y = x, ay = ax;
  std::vector<double> x_new(m), ax_new(m), cand(m);
  double t = 1.0;
  int clean_accepts = 0;

  // One backtracking projected-gradient step from y (gradient ay).  Returns
  // the accepted objective value; x_new/ax_new hold the iterate.
  auto line_search_step = [&](double f_y) {
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) cand[i] = y[i] - mu * ay[i];
      x_new = project_simplex(cand);
      op.apply(x_new, ax_new);
      const double f_new = 0.5 * dot(x_new, ax_new);
      double gd = 0.0, dd = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double di = x_new[i] - y[i];
        gd += ay[i] * di;
        dd += di * di;
      }
      // Small relative slack so roundoff cannot trigger an endless shrink.
      const double bound = f_y + gd + dd / (2.0 * mu) + 1e-12 * std::max(1.0, std::abs(f_y));
      if (f_new <= bound || mu <= mu_floor) return f_new;
      mu *= 0.5;
      clean_accepts = -1;  // this accept will not count as clean
    }
  };

  for (int k = 1; k <= opts.max_iter; ++k) {
    const double f_y = 0.5 * dot(y, ay);
    const int streak_before = clean_accepts;
    double f_new = line_search_step(f_y);
    bool restarted = false;

    if (f_new > f_x) {
      // Momentum overshoot: redo a plain step from the previous iterate,
      // which the line-search model guarantees is non-increasing.
      y = x_prev;
      ay = ax_prev;
      t = 1.0;
      restarted = true;
      f_new = line_search_step(f_x);
      if (f_new > f_x) {  // only roundoff left; hold position
        x_new = x_prev;
        ax_new = ax_prev;
        f_new = f_x;
      }
    } else {
      double gd = 0.0;
      for (std::size_t i = 0; i < m; ++i) gd += ay[i] * (x_new[i] - x_prev[i]);
      if (gd > 0.0) {
        t = 1.0;  // gradient-based momentum restart
        restarted = true;
      }
    }

    if (clean_accepts >= 0 && clean_accepts == streak_before) {
      if (++clean_accepts >= 3) {
        mu *= 1.25;
        clean_accepts = 0;
      }
    } else {
      clean_accepts = 0;
    }

    sol.trace.push_back({k, f_new, mu, restarted});
    if (opts.iterate_callback) opts.iterate_callback(x_new);

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double beta = (t - 1.0) / t_next;
    for (std::size_t i = 0; i < m; ++i) {
      y[i] = x_new[i] + beta * (x_new[i] - x_prev[i]);
      ay[i] = ax_new[i] + beta * (ax_new[i] - ax_prev[i]);  // A is linear
    }
    t = t_next;
    x_prev.swap(x_new);
    ax_prev.swap(ax_new);
    f_x = f_new;

    const std::size_t rows = sol.trace.size();
    if (rows > 10) {
      const double f_old = sol.trace[rows - 11].f0;
      if (std::abs(f_old - f_new) < opts.obj_tol * std::max(std::abs(f_new), 1e-300)) break;
    }
  }

  sol.weights = DensityWeights{std::move(x_prev), 1.0, DcfMethod::gp, "unscaled"};
  return sol;
}

double compute_r_prime(std::span<const double> w, const SampleSet& s,
                       std::span<const double> eta) {
  const std::size_t m = s.size();
  const int dim = s.dim();
  if (w.size() != m) throw std::invalid_argument("compute_r_prime: weight length mismatch");
  if (eta.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("compute_r_prime: eta must have one width per dimension");

  CompensatedSum total;
  for (double wi : w) {
    if (wi < 0) throw std::invalid_argument("compute_r_prime: weights must be nonnegative");
    total.add(wi);
  }
  if (std::abs(total.value() - 1.0) > 1e-9)
    throw std::invalid_argument("compute_r_prime: weights must sum to 1");

  // Real part of the Dirac-cell integral of the PSF: the per-axis factor is
  // the integral of e^{-i2pi k x} over [-eta/2, eta/2].
  CompensatedSum denom;
  for (std::size_t j = 0; j < m; ++j) {
    double prod = w[j];
    for (int d = 0; d < dim; ++d) {
      const double k = s.coord(j, d);
      const double e = eta[static_cast<std::size_t>(d)];
      prod *= k == 0.0 ? e : std::sin(kPi * k * e) / (kPi * k);
    }
    denom.add(prod);
  }
  const double den = denom.value();
  if (std::abs(den) < 1e-14)
    throw DegeneratePsfError("compute_r_prime: Dirac-cell integral of the PSF vanishes");
  if (den < 0)
    throw DegeneratePsfError(
        "compute_r_prime: Dirac-cell integral is negative; rescaled weights would flip sign");
  return 1.0 / den;
}

DensityWeights gp_weights(const SampleSet& s, const PsfConfig& cfg, const GpOptions& opts) {
  GpSolution sol = solve_gp(s, cfg, opts);
  const double r_prime = compute_r_prime(sol.weights.w, s, cfg.eta);

  DensityWeights out = std::move(sol.weights);
  for (double& wi : out.w) wi *= r_prime;
  out.scale_applied = r_prime;
  std::ostringstream params;
  params << "max_iter=" << opts.max_iter << " obj_tol=" << opts.obj_tol << " seed=" << opts.seed;
  out.params = params.str();
  return out;
}

}  // namespace gridkit
