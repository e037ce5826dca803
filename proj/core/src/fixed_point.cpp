#include "gridkit/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gridkit/errors.hpp"
#include "gridkit/parallel.hpp"

namespace gridkit {

namespace {

// Neighbor lists over a bucket grid: only pairs with per-axis grid-unit
// offset within the kernel half-width contribute.  Lists are built once in a
// fixed order, so denominator sums are deterministic.
struct NeighborLists {
  std::vector<std::vector<std::size_t>> neighbors;

  NeighborLists(const SampleSet& s, const KernelSpec& spec, std::array<int, 2> shape) {
    const std::size_t m = s.size();
    const double rx = 0.5 * spec.width / shape[0];  // support radius in cycles/pixel
    const double ry = 0.5 * spec.width / shape[1];

    const double cell_x = std::max(rx, 1e-9);
    const double cell_y = std::max(ry, 1e-9);
    auto key = [&](std::size_t i) {
      const auto cx = static_cast<std::int64_t>(std::floor(s.coord(i, 0) / cell_x));
      const auto cy = static_cast<std::int64_t>(std::floor(s.coord(i, 1) / cell_y));
      return cx * 4096 + cy;  // coordinates span few cells; no collisions that matter
    };
    std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < m; ++i) buckets[key(i)].push_back(i);

    neighbors.resize(m);
    parallel_for(0, static_cast<std::int64_t>(m), [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t ii = lo; ii < hi; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const auto cx = static_cast<std::int64_t>(std::floor(s.coord(i, 0) / cell_x));
        const auto cy = static_cast<std::int64_t>(std::floor(s.coord(i, 1) / cell_y));
        auto& list = neighbors[i];
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
          for (std::int64_t dy = -1; dy <= 1; ++dy) {
            auto it = buckets.find((cx + dx) * 4096 + (cy + dy));
            if (it == buckets.end()) continue;
            for (std::size_t j : it->second) {
              if (std::abs(s.coord(i, 0) - s.coord(j, 0)) <= rx &&
                  std::abs(s.coord(i, 1) - s.coord(j, 1)) <= ry)
                list.push_back(j);
            }
          }
        }
        std::sort(list.begin(), list.end());
      }
    });
  }
};

std::vector<double> kernel_sums(const SampleSet& s, const KernelSpec& spec,
                                std::array<int, 2> shape, const NeighborLists& nb,
                                std::span<const double> w) {
  const std::size_t m = s.size();
  std::vector<double> sums(m);
  parallel_for(0, static_cast<std::int64_t>(m), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t ii = lo; ii < hi; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      double acc = 0.0;
      for (std::size_t j : nb.neighbors[i]) {
        const double ux = (s.coord(i, 0) - s.coord(j, 0)) * shape[0];
        const double uy = (s.coord(i, 1) - s.coord(j, 1)) * shape[1];
        acc += w[j] * kaiser_bessel(ux, spec) * kaiser_bessel(uy, spec);
      }
      sums[i] = acc;
    }
  });
  return sums;
}

void check_inputs(const SampleSet& s, const KernelSpec& spec, std::array<int, 2> shape) {
  if (s.dim() != 2) throw std::invalid_argument("fixed_point_weights: sample set must be 2-D");
  if (!spec.unit_integral)
    throw std::invalid_argument("fixed_point_weights: kernel must be unit-integral normalized");
  spec.validate();
  if (shape[0] < 1 || shape[1] < 1)
    throw std::invalid_argument("fixed_point_weights: grid shape must be >= 1");
}

}  // namespace

DensityWeights fixed_point_weights(const SampleSet& s, const KernelSpec& spec,
                                   std::array<int, 2> grid_shape, int n_iter) {
  check_inputs(s, spec, grid_shape);
  if (n_iter < 1) throw std::invalid_argument("fixed_point_weights: n_iter must be >= 1");

  const std::size_t m = s.size();
  NeighborLists nb(s, spec, grid_shape);
  std::vector<double> w(m, 1.0 / static_cast<double>(m));

  for (int it = 0; it < n_iter; ++it) {
    std::vector<double> denom = kernel_sums(s, spec, grid_shape, nb, w);
    for (std::size_t i = 0; i < m; ++i) {
      if (denom[i] == 0.0) {
        std::ostringstream msg;
        msg << "fixed_point_weights: sample " << i
            << " sees no kernel mass (kernel too narrow for the sampling gaps)";
        throw ZeroDenominatorError(msg.str());
      }
      w[i] /= denom[i];
    }
  }

  std::ostringstream params;
  params << "n_iter=" << n_iter << " W=" << spec.width << " beta=" << spec.beta;
  return DensityWeights{std::move(w), 1.0, DcfMethod::fixed_point, params.str()};
}

std::vector<double> fixed_point_residual(const SampleSet& s, const KernelSpec& spec,
                                         std::array<int, 2> grid_shape,
                                         std::span<const double> w) {
  check_inputs(s, spec, grid_shape);
  if (w.size() != s.size())
    throw std::invalid_argument("fixed_point_residual: weight length mismatch");
  NeighborLists nb(s, spec, grid_shape);
  std::vector<double> res = kernel_sums(s, spec, grid_shape, nb, w);
  for (double& r : res) r -= 1.0;
  return res;
}

}  // namespace gridkit
