#include "gridkit/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace gridkit {

namespace {

constexpr std::size_t kBlock = 1024;

double pairwise_reduce(std::span<double> v) {
  std::size_t n = v.size();
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) v[i] += v[i + half];
    n = half;
  }
  return n ? v[0] : 0.0;
}

}  // namespace

double fixed_block_dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  std::vector<double> blocks((n + kBlock - 1) / kBlock, 0.0);
  for (std::size_t blk = 0; blk < blocks.size(); ++blk) {
    const std::size_t lo = blk * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    blocks[blk] = s;
  }
  return pairwise_reduce(blocks);
}

double fixed_block_sum(std::span<const double> a) {
  const std::size_t n = a.size();
  std::vector<double> blocks((n + kBlock - 1) / kBlock, 0.0);
  for (std::size_t blk = 0; blk < blocks.size(); ++blk) {
    const std::size_t lo = blk * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i];
    blocks[blk] = s;
  }
  return pairwise_reduce(blocks);
}

}  // namespace gridkit
