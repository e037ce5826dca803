#include "gridkit/sample_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gridkit {

SampleSet::SampleSet(int dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 1) throw std::invalid_argument("SampleSet: dim must be >= 1");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0)
    throw std::invalid_argument("SampleSet: coordinate array must be a nonempty multiple of dim");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("SampleSet: coordinates must be finite");
    if (c < -0.5 || c > 0.5)
      throw std::invalid_argument("SampleSet: coordinates must lie in [-0.5, 0.5]");
  }
}

namespace {

// Union-find over sample indices.
struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smaller index becomes the root
  }
};

struct CellKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t v : k) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> find_duplicates(const SampleSet& s, double tol) {
  if (tol < 0) throw std::invalid_argument("find_duplicates: tol must be >= 0");
  const std::size_t m = s.size();
  const int d = s.dim();
  DisjointSets sets(m);

  if (tol == 0.0) {
    // Exact coincidence; map keys compare -0.0 == +0.0.
    std::map<std::vector<double>, std::size_t> first_at;
    std::vector<double> key(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m; ++i) {
      for (int k = 0; k < d; ++k) key[static_cast<std::size_t>(k)] = s.coord(i, k);
      auto [it, inserted] = first_at.try_emplace(key, i);
      if (!inserted) sets.unite(it->second, i);
    }
  } else {
    // Hash grid with cell side tol: points within tol (max-norm) land in the
    // same or an adjacent cell.
    std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, CellKeyHash> cells;
    std::vector<std::int64_t> key(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m; ++i) {
      for (int k = 0; k < d; ++k)
        key[static_cast<std::size_t>(k)] =
            static_cast<std::int64_t>(std::floor(s.coord(i, k) / tol));
      cells[key].push_back(i);
    }
    std::vector<std::int64_t> probe(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m; ++i) {
      for (int k = 0; k < d; ++k)
        key[static_cast<std::size_t>(k)] =
            static_cast<std::int64_t>(std::floor(s.coord(i, k) / tol));
      // Enumerate the 3^d neighborhood.
      std::vector<int> offset(static_cast<std::size_t>(d), -1);
      while (true) {
        for (int k = 0; k < d; ++k)
          probe[static_cast<std::size_t>(k)] =
              key[static_cast<std::size_t>(k)] + offset[static_cast<std::size_t>(k)];
        auto it = cells.find(probe);
        if (it != cells.end()) {
          for (std::size_t j : it->second) {
            if (j >= i) continue;
            double dist = 0.0;
            for (int k = 0; k < d; ++k)
              dist = std::max(dist, std::abs(s.coord(i, k) - s.coord(j, k)));
            if (dist <= tol) sets.unite(i, j);
          }
        }
        int k = 0;
        for (; k < d; ++k) {
          if (++offset[static_cast<std::size_t>(k)] <= 1) break;
          offset[static_cast<std::size_t>(k)] = -1;
        }
        if (k == d) break;
      }
    }
  }

  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<std::size_t, std::size_t> root_to_group;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = sets.find(i);
    auto [it, inserted] = root_to_group.try_emplace(r, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

}  // namespace gridkit
