#include "gridkit/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gridkit {

std::vector<double> project_simplex(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) throw std::invalid_argument("project_simplex: empty input");
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("project_simplex: input must be finite");

  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  long double cumsum = 0.0L;
  long double tau = 0.0L;  // threshold of the largest admissible rho
  for (std::size_t i = 0; i < n; ++i) {
    cumsum += sorted[i];
    const long double t = (cumsum - 1.0L) / static_cast<long double>(i + 1);
    if (sorted[i] - t > 0.0L) tau = t;
  }
  // rho = 1 always qualifies: the i = 0 test reads sorted[0] + 1 - sorted[0] > 0.

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::max(0.0, static_cast<double>(static_cast<long double>(v[i]) - tau));
  return out;
}

}  // namespace gridkit
