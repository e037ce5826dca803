#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gridkit {

/// A set of M non-Cartesian frequency locations in D dimensions, row-major
/// M x D, in cycles/pixel.  Every component lies in [-0.5, 0.5] and is
/// finite; M >= 1.  Construction validates.
class SampleSet {
 public:
  SampleSet(int dim, std::vector<double> coords);

  int dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }

  double coord(std::size_t m, int d) const {
    return coords_[m * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(d)];
  }
  std::span<const double> point(std::size_t m) const {
    return {coords_.data() + m * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  std::span<const double> flat() const { return coords_; }

 private:
  int dim_;
  std::vector<double> coords_;
};

/// Partition of {0..M-1} into groups of coincident samples: two indices share
/// a group iff they are linked by a chain of max-norm distances <= tol.
/// Groups are ordered by smallest member; indices ascend within a group;
/// singletons included.
std::vector<std::vector<std::size_t>> find_duplicates(const SampleSet& s, double tol = 1e-12);

}  // namespace gridkit
