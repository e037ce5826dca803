#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gridkit/density_weights.hpp"
#include "gridkit/gradient_operator.hpp"
#include "gridkit/psf_config.hpp"
#include "gridkit/sample_set.hpp"

namespace gridkit {

struct GpOptions {
  int max_iter = 2000;
  double obj_tol = 1e-8;       // relative objective change over a 10-iterate window
  std::uint64_t seed = 0;      // seeds the power-iteration start vector
  GradientMode mode = GradientMode::automatic;
  std::size_t memory_budget_bytes = GradientOperator::kDefaultBudgetBytes;
  /// Invoked with every accepted iterate (including the start).  Used by
  /// tests to check feasibility; leave empty otherwise.
  std::function<void(std::span<const double>)> iterate_callback;
};

struct TraceRow {
  int iter = 0;
  double f0 = 0.0;
  double step = 0.0;
  bool restarted = false;
};

struct GpSolution {
  DensityWeights weights;  // unscaled: sums to 1, scale_applied = 1
  std::vector<TraceRow> trace;
  double operator_norm = 0.0;
  bool power_iteration_converged = false;
};

/// Minimizes f0(w) = 0.5 w'Aw over the probability simplex by accelerated
/// projected gradient descent with a backtracking line search (shrink 0.5,
/// regrowth 1.25x after three clean accepts, gradient-based momentum restart,
/// monotone fallback).  Start point is the uniform vector; the initial step
/// is 1/||A|| from power iteration.  Every accepted iterate lies on the
/// simplex and the recorded objective trace is non-increasing.
GpSolution solve_gp(const SampleSet& s, const PsfConfig& cfg, const GpOptions& opts = {});

/// Rescaling factor making the PSF integrate to 1 over the Dirac cell eta:
/// r' = 1 / sum_j w_j prod_d sin(pi k_{j,d} eta_d)/(pi k_{j,d}), with the
/// factor's k -> 0 limit eta_d substituted at zero coordinates.  Requires a
/// unit-sum nonnegative w; throws DegeneratePsfError when the denominator
/// magnitude falls below 1e-14 (or is negative).
double compute_r_prime(std::span<const double> w, const SampleSet& s,
                       std::span<const double> eta);

/// Full pipeline: solve at unit sum, then scale by r' so the Dirac-cell
/// integral of the PSF equals 1.  scale_applied records r'.
DensityWeights gp_weights(const SampleSet& s, const PsfConfig& cfg, const GpOptions& opts = {});

}  // namespace gridkit
