#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace gridkit {

/// Dot product with fixed-block pairwise summation: 1024-element blocks are
/// summed sequentially, block sums are combined by a pairwise tree.  The
/// result depends only on the operands, never on thread count or scheduling.
double fixed_block_dot(std::span<const double> a, std::span<const double> b);

/// Sum with the same fixed-block pairwise scheme.
double fixed_block_sum(std::span<const double> a);

/// Compensated (Neumaier) running sum; used where near-exact totals matter.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace gridkit
