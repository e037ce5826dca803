#include "gridkit/trajectories.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gridkit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_k_max(double k_max) {
  if (!(k_max > 0.0) || k_max > 0.5)
    throw std::invalid_argument("trajectory: k_max must lie in (0, 0.5]");
}

}  // namespace

SampleSet radial_trajectory(std::size_t n_spokes, std::size_t n_per_spoke, double k_max) {
  if (n_spokes < 1) throw std::invalid_argument("radial_trajectory: n_spokes must be >= 1");
  if (n_per_spoke < 2) throw std::invalid_argument("radial_trajectory: n_per_spoke must be >= 2");
  check_k_max(k_max);

  std::vector<double> coords;
  coords.reserve(2 * n_spokes * n_per_spoke);
  const double denom = static_cast<double>(n_per_spoke - 1);
  for (std::size_t j = 0; j < n_spokes; ++j) {
    const double angle = kPi * static_cast<double>(j) / static_cast<double>(n_spokes);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (std::size_t i = 0; i < n_per_spoke; ++i) {
      // Exact at both endpoints and at the spoke center (odd counts).
      const double r = k_max * (2.0 * static_cast<double>(i) - denom) / denom;
      coords.push_back(r * c);
      coords.push_back(r * s);
    }
  }
  return SampleSet(2, std::move(coords));
}

SampleSet spiral_trajectory(std::size_t n_interleaves, std::size_t n_revolutions,
                            std::size_t n_per_interleave, double k_max) {
  if (n_interleaves < 1 || n_revolutions < 1 || n_per_interleave < 1)
    throw std::invalid_argument("spiral_trajectory: counts must be >= 1");
  check_k_max(k_max);

  std::vector<double> coords;
  coords.reserve(2 * n_interleaves * n_per_interleave);
  for (std::size_t p = 0; p < n_interleaves; ++p) {
    const double phase = 2.0 * kPi * static_cast<double>(p) / static_cast<double>(n_interleaves);
    for (std::size_t i = 0; i < n_per_interleave; ++i) {
      const double t = n_per_interleave == 1
                           ? 0.0
                           : static_cast<double>(i) / static_cast<double>(n_per_interleave - 1);
      const double r = k_max * t;
      const double angle = 2.0 * kPi * static_cast<double>(n_revolutions) * t + phase;
      coords.push_back(r * std::cos(angle));
      coords.push_back(r * std::sin(angle));
    }
  }
  return SampleSet(2, std::move(coords));
}

SampleSet propeller_trajectory(std::size_t n_angles, double angle_step,
                               std::size_t lines_per_angle, double line_sep,
                               std::size_t points_per_line) {
  if (n_angles < 1 || lines_per_angle < 1 || points_per_line < 1)
    throw std::invalid_argument("propeller_trajectory: counts must be >= 1");
  if (line_sep < 0.0) throw std::invalid_argument("propeller_trajectory: line_sep must be >= 0");

  std::vector<double> coords;
  coords.reserve(2 * n_angles * lines_per_angle * points_per_line);
  const double half = 0.5 * static_cast<double>(lines_per_angle - 1);
  for (std::size_t a = 0; a < n_angles; ++a) {
    const double angle = static_cast<double>(a) * angle_step;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (std::size_t l = 0; l < lines_per_angle; ++l) {
      const double off = (static_cast<double>(l) - half) * line_sep;
      for (std::size_t i = 0; i < points_per_line; ++i) {
        const double u = points_per_line == 1
                             ? 0.0
                             : -0.5 + static_cast<double>(i) / static_cast<double>(points_per_line - 1);
        const double x = u * c - off * s;
        const double y = u * s + off * c;
        if (x < -0.5 || x > 0.5 || y < -0.5 || y > 0.5) continue;
        coords.push_back(x);
        coords.push_back(y);
      }
    }
  }
  if (coords.empty())
    throw std::invalid_argument("propeller_trajectory: every point fell outside the unit box");
  return SampleSet(2, std::move(coords));
}

}  // namespace gridkit
