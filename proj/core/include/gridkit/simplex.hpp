#pragma once

#include <span>
#include <vector>

namespace gridkit {

/// Euclidean projection onto the probability simplex {u : u >= 0, 1'u = 1}
/// by the sort-and-threshold rule: sort v descending, take the largest rho
/// with v_(rho) + (1 - sum_{i<=rho} v_(i))/rho > 0, set
/// tau = (sum_{i<=rho} v_(i) - 1)/rho and return max(v - tau, 0).
/// Compensated cumulative sums keep 1'result within ~1e-15 of 1.
std::vector<double> project_simplex(std::span<const double> v);

}  // namespace gridkit
