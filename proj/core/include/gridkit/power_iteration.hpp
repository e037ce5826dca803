#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace gridkit {

struct PowerIterationResult {
  double norm = 0.0;     // spectral-norm estimate (largest eigenvalue, PSD operator)
  bool converged = false;
  int iterations = 0;
};

/// Power iteration on a symmetric PSD operator of the given size.  Converges
/// when successive Rayleigh quotients differ by less than tol relatively;
/// after max_iter a warning flag is returned with the best estimate.
/// Deterministic for a fixed seed.
PowerIterationResult power_iteration(
    const std::function<void(std::span<const double>, std::span<double>)>& apply,
    std::size_t size, double tol = 1e-6, int max_iter = 1000, std::uint64_t seed = 0);

}  // namespace gridkit
