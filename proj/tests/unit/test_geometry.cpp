#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "gridkit/sample_set.hpp"
#include "gridkit/trajectories.hpp"

using namespace gridkit;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sample set validates invariants") {
  CHECK_THROWS_AS(SampleSet(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(SampleSet(2, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(SampleSet(2, {0.6, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampleSet(2, {std::nan(""), 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampleSet(0, {0.0}), std::invalid_argument);
  SampleSet ok(2, {0.5, -0.5});
  CHECK(ok.size() == 1);
  CHECK(ok.dim() == 2);
}

TEST_CASE("radial: paper-scale point count and max radius") {
  auto s = radial_trajectory(360, 150, 0.5);
  CHECK(s.size() == 54000);
  double max_r = 0;
  for (std::size_t m = 0; m < s.size(); ++m)
    max_r = std::max(max_r, std::hypot(s.coord(m, 0), s.coord(m, 1)));
  CHECK(max_r == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("radial: single horizontal spoke") {
  auto s = radial_trajectory(1, 3, 0.5);
  REQUIRE(s.size() == 3);
  CHECK(s.coord(0, 0) == -0.5);
  CHECK(s.coord(0, 1) == 0.0);
  CHECK(s.coord(1, 0) == 0.0);
  CHECK(s.coord(1, 1) == 0.0);
  CHECK(s.coord(2, 0) == 0.5);
  CHECK(s.coord(2, 1) == 0.0);
}

TEST_CASE("radial: radii and angles from direct enumeration") {
  auto s = radial_trajectory(4, 5, 0.5);
  REQUIRE(s.size() == 20);
  for (std::size_t m = 0; m < s.size(); ++m) {
    const double r = std::hypot(s.coord(m, 0), s.coord(m, 1));
    const bool ok_r = std::abs(r - 0.0) < 1e-15 || std::abs(r - 0.25) < 1e-15 ||
                      std::abs(r - 0.5) < 1e-15;
    CHECK(ok_r);
    if (r > 1e-12) {
      double angle = std::atan2(s.coord(m, 1), s.coord(m, 0));
      if (angle < 0) angle += kPi;  // fold the negative half-spoke
      const double q = angle / (kPi / 4);
      CHECK(std::abs(q - std::round(q)) < 1e-12);
    }
  }
}

TEST_CASE("radial: argument validation") {
  CHECK_THROWS_AS(radial_trajectory(0, 5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(radial_trajectory(4, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(radial_trajectory(4, 5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_trajectory(4, 5, 0.6), std::invalid_argument);
}

TEST_CASE("spiral: paper-scale point count") {
  auto s = spiral_trajectory(8, 19, 4000, 0.5);
  CHECK(s.size() == 32000);
}

TEST_CASE("spiral: endpoints of one revolution") {
  auto s = spiral_trajectory(1, 1, 2, 0.5);
  REQUIRE(s.size() == 2);
  CHECK(s.coord(0, 0) == 0.0);
  CHECK(s.coord(0, 1) == 0.0);
  CHECK(s.coord(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(s.coord(1, 1)) < 1e-15);
}

TEST_CASE("spiral: second interleave is the first rotated by pi") {
  auto s = spiral_trajectory(2, 1, 100, 0.5);
  REQUIRE(s.size() == 200);
  for (std::size_t i = 0; i < 100; ++i) {
    // rotation by pi = negation
    CHECK(s.coord(100 + i, 0) == doctest::Approx(-s.coord(i, 0)).epsilon(1e-12));
    CHECK(s.coord(100 + i, 1) == doctest::Approx(-s.coord(i, 1)).epsilon(1e-12));
  }
}

TEST_CASE("propeller: single line, no offset") {
  auto s = propeller_trajectory(1, 0.0, 1, 0.0, 3);
  REQUIRE(s.size() == 3);
  CHECK(s.coord(0, 0) == -0.5);
  CHECK(s.coord(1, 0) == 0.0);
  CHECK(s.coord(2, 0) == 0.5);
  for (std::size_t m = 0; m < 3; ++m) CHECK(s.coord(m, 1) == 0.0);
}

TEST_CASE("propeller: horizontal plus vertical lines") {
  auto s = propeller_trajectory(2, kPi / 2, 1, 0.0, 3);
  REQUIRE(s.size() == 6);
  for (std::size_t m = 0; m < 3; ++m) CHECK(s.coord(m, 1) == 0.0);
  for (std::size_t m = 3; m < 6; ++m) CHECK(std::abs(s.coord(m, 0)) < 1e-15);
  CHECK(s.coord(3, 1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(s.coord(5, 1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("propeller: blade geometry at paper scale") {
  const double step = 2.0 * kPi / 180.0;  // 2 degrees
  auto s = propeller_trajectory(90, step, 9, 0.03, 200);
  CHECK(s.size() <= 162000);
  CHECK(s.size() > 150000);  // only box corners get discarded
  // First blade (angle 0): perpendicular offsets span the 0.24 blade width.
  double min_y = 1, max_y = -1;
  for (std::size_t m = 0; m < 9 * 200; ++m) {
    min_y = std::min(min_y, s.coord(m, 1));
    max_y = std::max(max_y, s.coord(m, 1));
  }
  CHECK(max_y - min_y == doctest::Approx(0.24).epsilon(1e-12));
}

TEST_CASE("generators stay inside the unit box under random arguments") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> counts(1, 40);
    std::uniform_real_distribution<double> kmax(0.01, 0.5);
    auto check_box = [&](const SampleSet& s) {
      for (std::size_t m = 0; m < s.size(); ++m) {
        CHECK(std::abs(s.coord(m, 0)) <= 0.5);
        CHECK(std::abs(s.coord(m, 1)) <= 0.5);
      }
    };
    check_box(radial_trajectory(counts(rng), 2 + counts(rng), kmax(rng)));
    check_box(spiral_trajectory(counts(rng), counts(rng), counts(rng), kmax(rng)));
    std::uniform_real_distribution<double> ang(0.0, kPi);
    std::uniform_real_distribution<double> sep(0.0, 0.1);
    check_box(propeller_trajectory(counts(rng), ang(rng), counts(rng), sep(rng), 2 + counts(rng)));
  }
}

TEST_CASE("generators are deterministic") {
  auto a = radial_trajectory(17, 23, 0.41);
  auto b = radial_trajectory(17, 23, 0.41);
  REQUIRE(a.size() == b.size());
  for (std::size_t m = 0; m < a.size(); ++m)
    for (int d = 0; d < 2; ++d) CHECK(a.coord(m, d) == b.coord(m, d));

  auto c = spiral_trajectory(3, 5, 101, 0.5);
  auto e = spiral_trajectory(3, 5, 101, 0.5);
  for (std::size_t m = 0; m < c.size(); ++m)
    for (int d = 0; d < 2; ++d) CHECK(c.coord(m, d) == e.coord(m, d));
}

TEST_CASE("radial point count is exact for random arguments") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> spokes(1, 50), pts(2, 60);
  for (int t = 0; t < 20; ++t) {
    const std::size_t ns = spokes(rng), np = pts(rng);
    CHECK(radial_trajectory(ns, np, 0.5).size() == ns * np);
  }
}

TEST_CASE("find_duplicates: radial spoke centers form one group") {
  auto s = radial_trajectory(4, 5, 0.5);
  auto groups = find_duplicates(s, 1e-12);
  // Spoke centers are indices 2, 7, 12, 17.
  bool found = false;
  for (const auto& g : groups) {
    if (g.size() == 4) {
      CHECK(g == std::vector<std::size_t>{2, 7, 12, 17});
      found = true;
    } else {
      CHECK(g.size() == 1);
    }
  }
  CHECK(found);
  CHECK(groups.size() == 17);  // 16 singletons + 1 center group
}

TEST_CASE("find_duplicates: distinct points at zero tolerance are singletons") {
  SampleSet s(2, {0.1, 0.1, 0.2, 0.2, -0.3, 0.4});
  auto groups = find_duplicates(s, 0.0);
  CHECK(groups.size() == 3);
  for (const auto& g : groups) CHECK(g.size() == 1);
}

TEST_CASE("find_duplicates: two identical points share a group") {
  SampleSet s(2, {0.25, -0.125, 0.25, -0.125});
  auto groups = find_duplicates(s, 0.0);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("find_duplicates: transitive closure links chains") {
  // a-b and b-c within tol, a-c not.
  const double tol = 1e-3;
  SampleSet s(2, {0.0, 0.0, 0.0009, 0.0, 0.0018, 0.0});
  auto groups = find_duplicates(s, tol);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].size() == 3);
}

TEST_CASE("find_duplicates rejects negative tolerance") {
  SampleSet s(2, {0.0, 0.0});
  CHECK_THROWS_AS(find_duplicates(s, -1.0), std::invalid_argument);
}
