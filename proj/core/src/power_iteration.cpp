#include "gridkit/power_iteration.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gridkit/numeric.hpp"

namespace gridkit {

PowerIterationResult power_iteration(
    const std::function<void(std::span<const double>, std::span<double>)>& apply,
    std::size_t size, double tol, int max_iter, std::uint64_t seed) {
  if (size == 0) throw std::invalid_argument("power_iteration: empty operator");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> b(size), ab(size);
  for (double& x : b) x = normal(rng);
  double nb = std::sqrt(fixed_block_dot(b, b));
  if (nb == 0.0) b[0] = nb = 1.0;
  for (double& x : b) x /= nb;

  PowerIterationResult res;
  double prev = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    apply(b, ab);
    const double rayleigh = fixed_block_dot(b, ab);
    const double nab = std::sqrt(fixed_block_dot(ab, ab));
    res.norm = rayleigh;
    res.iterations = it;
    if (nab == 0.0) {  // operator annihilates the iterate; norm estimate 0
      res.norm = 0.0;
      res.converged = true;
      return res;
    }
    if (it > 1 && std::abs(rayleigh - prev) <= tol * std::max(std::abs(rayleigh), 1e-300)) {
      res.converged = true;
      return res;
    }
    prev = rayleigh;
    for (std::size_t i = 0; i < size; ++i) b[i] = ab[i] / nab;
  }
  return res;  // converged stays false: best estimate with a warning flag
}

}  // namespace gridkit
