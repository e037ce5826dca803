#pragma once

#include <array>
#include <span>
#include <vector>

#include "gridkit/density_weights.hpp"
#include "gridkit/kaiser_bessel.hpp"
#include "gridkit/sample_set.hpp"

namespace gridkit {

/// Fixed-point density compensation: starting from w = 1/M, iterate
///   w_m <- w_m / sum_j w_j C2(k_m - k_j)
/// exactly n_iter times, where C2 is the separable 2-D kernel
/// C(dk_x * grid_shape[0]) * C(dk_y * grid_shape[1]) evaluated in grid units.
/// Requires a unit-integral kernel.  Throws ZeroDenominatorError (naming the
/// sample) if a denominator vanishes.
DensityWeights fixed_point_weights(const SampleSet& s, const KernelSpec& spec,
                                   std::array<int, 2> grid_shape, int n_iter = 8);

/// Residual report sum_j w_j C2(k_m - k_j) - 1 for each sample; zero exactly
/// at a fixed point of the iteration.
std::vector<double> fixed_point_residual(const SampleSet& s, const KernelSpec& spec,
                                         std::array<int, 2> grid_shape,
                                         std::span<const double> w);

}  // namespace gridkit
