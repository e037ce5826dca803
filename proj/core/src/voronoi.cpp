#include "gridkit/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gridkit/errors.hpp"

namespace gridkit {

namespace {

struct Vec2 {
  double x, y;
};

// Keeps the part of a convex polygon with dot(v, n) <= c (closer to the cell
// seed than to the rival point).  Sutherland-Hodgman, one half-plane.
void clip_halfplane(std::vector<Vec2>& poly, Vec2 n, double c, std::vector<Vec2>& scratch) {
  scratch.clear();
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % k];
    const double da = a.x * n.x + a.y * n.y - c;
    const double db = b.x * n.x + b.y * n.y - c;
    if (da <= 0.0) scratch.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double t = da / (da - db);
      scratch.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  poly.swap(scratch);
}

double polygon_area(const std::vector<Vec2>& poly) {
  double twice = 0.0;
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % k];
    twice += a.x * b.y - a.y * b.x;
  }
  return 0.5 * std::abs(twice);
}

// Uniform bucket grid over the unit box for ring-ordered candidate search.
struct BucketGrid {
  int cells;
  double side;
  std::vector<std::vector<std::size_t>> buckets;

  BucketGrid(const std::vector<Vec2>& pts) {
    cells = std::clamp(static_cast<int>(std::ceil(std::sqrt(static_cast<double>(pts.size())))),
                       1, 1024);
    side = 1.0 / cells;
    buckets.resize(static_cast<std::size_t>(cells) * cells);
    for (std::size_t i = 0; i < pts.size(); ++i) buckets[index_of(pts[i])].push_back(i);
  }

  int coord_to_cell(double v) const {
    return std::clamp(static_cast<int>(std::floor((v + 0.5) / side)), 0, cells - 1);
  }
  std::size_t index_of(Vec2 p) const {
    return static_cast<std::size_t>(coord_to_cell(p.y)) * cells + coord_to_cell(p.x);
  }
};

}  // namespace

DensityWeights voronoi_weights(const SampleSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("voronoi_weights: sample set must be 2-D");

  const auto groups = find_duplicates(s, 1e-12);
  std::vector<Vec2> reps;
  reps.reserve(groups.size());
  for (const auto& g : groups) reps.push_back({s.coord(g.front(), 0), s.coord(g.front(), 1)});

  if (reps.size() < 3)
    throw DegenerateGeometryError("voronoi_weights: need at least 3 distinct points");
  {
    // Collinearity: all cross products against the first distinct pair ~ 0.
    const Vec2 p0 = reps[0];
    std::size_t j = 1;
    while (j < reps.size() && reps[j].x == p0.x && reps[j].y == p0.y) ++j;
    const Vec2 e{reps[j].x - p0.x, reps[j].y - p0.y};
    bool collinear = true;
    for (std::size_t i = j + 1; i < reps.size() && collinear; ++i) {
      const double cross = e.x * (reps[i].y - p0.y) - e.y * (reps[i].x - p0.x);
      if (std::abs(cross) > 1e-13) collinear = false;
    }
    if (collinear)
      throw DegenerateGeometryError("voronoi_weights: all distinct points are collinear");
  }

  BucketGrid grid(reps);
  const std::vector<Vec2> box = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};

  // Geometric structure is built cell by cell in a fixed order; this stays
  // single-threaded by design.
  std::vector<double> areas(reps.size());
  std::vector<Vec2> poly, scratch;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Vec2 p = reps[i];
    poly = box;

    auto radius = [&]() {
      double r2 = 0.0;
      for (const Vec2& v : poly) {
        const double dx = v.x - p.x, dy = v.y - p.y;
        r2 = std::max(r2, dx * dx + dy * dy);
      }
      return std::sqrt(r2);
    };
    double r = radius();

    const int ci = grid.coord_to_cell(p.x);
    const int cj = grid.coord_to_cell(p.y);
    for (int ring = 0; ring < 2 * grid.cells; ++ring) {
      // Points in ring cells are at least (ring-1)*side away from p.
      if (ring >= 2 && (ring - 1) * grid.side > 2.0 * r) break;
      bool any_cell = false;
      for (int dj = -ring; dj <= ring; ++dj) {
        const int j = cj + dj;
        if (j < 0 || j >= grid.cells) continue;
        const bool edge_row = std::abs(dj) == ring;
        const int step = edge_row ? 1 : 2 * ring;
        for (int di = -ring; di <= ring; di += std::max(step, 1)) {
          const int ii = ci + di;
          if (ii < 0 || ii >= grid.cells) continue;
          any_cell = true;
          for (std::size_t q : grid.buckets[static_cast<std::size_t>(j) * grid.cells + ii]) {
            if (q == i) continue;
            const Vec2 other = reps[q];
            const double dx = other.x - p.x, dy = other.y - p.y;
            const double dist = std::hypot(dx, dy);
            if (dist > 2.0 * r) continue;  // bisector cannot reach the cell
            const double c = dx * (p.x + other.x) / 2.0 + dy * (p.y + other.y) / 2.0;
            clip_halfplane(poly, {dx, dy}, c, scratch);
            if (poly.size() < 3) break;
            r = radius();
          }
          if (poly.size() < 3) break;
        }
        if (poly.size() < 3) break;
      }
      if (poly.size() < 3) break;
      // A fully out-of-bounds ring means every later ring is out too.
      if (!any_cell && ring > 0) break;
    }
    areas[i] = poly.size() >= 3 ? polygon_area(poly) : 0.0;
  }

  std::vector<double> w(s.size());
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const double share = areas[gi] / static_cast<double>(groups[gi].size());
    for (std::size_t idx : groups[gi]) w[idx] = share;
  }
  return DensityWeights{std::move(w), 1.0, DcfMethod::voronoi, "box_clipped"};
}

}  // namespace gridkit
