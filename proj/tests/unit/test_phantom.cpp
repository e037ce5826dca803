#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gridkit/bessel.hpp"
#include "gridkit/phantom.hpp"
#include "oracles.hpp"
#include "quadrature.hpp"

using namespace gridkit;
using testsupport::adaptive_quad;
using testsupport::QuadOptions;

namespace {

constexpr double kPi = std::numbers::pi;

// Extended-precision ascending series for J1; independent oracle for the
// small-argument range.
long double j1_series_oracle(long double x) {
  const long double q = x * x / 4.0L;
  long double term = x / 2.0L, sum = term;
  for (int k = 1; k <= 80; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + 1));
    sum += term;
  }
  return sum;
}

// Fourier transform of a shifted disk by 1-D quadrature with the analytic
// inner x-integral; the theta substitution removes the sqrt endpoint kinks.
// No Bessel functions involved.
std::complex<double> disk_ft_oracle(double radius, double cx, double cy, double kx, double ky) {
  auto integrand = [&](double theta) -> std::complex<double> {
    const double y = radius * std::sin(theta);
    const double w = radius * std::cos(theta);  // half-width of the chord
    double inner;
    if (kx == 0.0) {
      inner = 2.0 * w;
    } else {
      inner = std::sin(2.0 * kPi * kx * w) / (kPi * kx);
    }
    const double phase = -2.0 * kPi * ky * y;
    return inner * std::complex<double>(std::cos(phase), std::sin(phase)) * radius *
           std::cos(theta);
  };
  QuadOptions opt;
  opt.rel_tol = 1e-12;
  auto val = adaptive_quad<std::complex<double>>(integrand, -kPi / 2, kPi / 2, opt);
  const double shift = -2.0 * kPi * (kx * cx + ky * cy);
  return val * std::complex<double>(std::cos(shift), std::sin(shift));
}

PhantomComponent make(Shape s, double cx, double cy, double sx, double sy, double amp) {
  PhantomComponent c;
  c.shape = s;
  c.center = {cx, cy};
  c.scale = {sx, sy};
  c.amplitude = amp;
  return c;
}

}  // namespace

TEST_CASE("bessel_j1 matches the standard library and the series oracle") {
  for (double x = 0.0; x <= 40.0; x += 0.0625) {
    CHECK(std::abs(bessel_j1(x) - std::cyl_bessel_j(1.0, x)) < 1e-10);
  }
  for (double x = 0.0; x <= 12.0; x += 0.03125) {
    CHECK(std::abs(bessel_j1(x) - static_cast<double>(j1_series_oracle(x))) < 1e-12);
  }
  // odd symmetry
  CHECK(bessel_j1(-3.7) == -bessel_j1(3.7));
}

TEST_CASE("bessel_i0 matches the standard library") {
  for (double x = 0.0; x <= 30.0; x += 0.125) {
    const double ref = std::cyl_bessel_i(0.0, x);
    CHECK(std::abs(bessel_i0(x) - ref) <= 1e-12 * ref);
  }
  CHECK(bessel_i0(-2.5) == bessel_i0(2.5));
}

TEST_CASE("phantom_image: rect indicator values") {
  PhantomSpec p{{make(Shape::rect, 0, 0, 10, 10, 1.0)}};
  auto img = phantom_image(p, 64, 64);
  CHECK(img.at(32, 32) == 1.0);       // pixel coordinate (0,0)
  CHECK(img.at(32 + 20, 32 + 20) == 0.0);  // (20,20) outside the support
}

TEST_CASE("phantom_image: tri midpoint value") {
  PhantomSpec p{{make(Shape::tri, 0, 0, 8, 8, 1.0)}};
  auto img = phantom_image(p, 64, 64);
  CHECK(img.at(32 + 4, 32) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("phantom_image: two components sum pointwise") {
  PhantomComponent a = make(Shape::tri, -3, 2, 6, 5, 0.7);
  PhantomComponent b = make(Shape::circ, 4, -1, 7, 7, 1.3);
  auto img_a = phantom_image(PhantomSpec{{a}}, 48, 40);
  auto img_b = phantom_image(PhantomSpec{{b}}, 48, 40);
  auto img_ab = phantom_image(PhantomSpec{{a, b}}, 48, 40);
  for (std::size_t n = 0; n < img_ab.data.size(); ++n)
    CHECK(img_ab.data[n] == img_a.data[n] + img_b.data[n]);
}

TEST_CASE("phantom_image rejects supports beyond the grid") {
  PhantomSpec p{{make(Shape::rect, 30, 0, 10, 10, 1.0)}};  //支持 up to 35 > 32
  CHECK_THROWS_AS(phantom_image(p, 64, 64), std::invalid_argument);
  PhantomSpec q{{make(Shape::circ, 0, 0, 33, 33, 1.0)}};
  CHECK_THROWS_AS(phantom_image(q, 64, 64), std::invalid_argument);
}

TEST_CASE("phantom_fourier: rect DC value equals the area") {
  PhantomSpec p{{make(Shape::rect, 0, 0, 10, 10, 1.0)}};
  SampleSet s(2, {0.0, 0.0});
  auto vals = phantom_fourier(p, s);
  CHECK(vals[0].real() == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(vals[0].imag() == 0.0);
}

TEST_CASE("phantom_fourier: tri hits the sinc^2 zero") {
  PhantomSpec p{{make(Shape::tri, 0, 0, 8, 8, 1.0)}};
  SampleSet s(2, {0.125, 0.0});
  auto vals = phantom_fourier(p, s);
  CHECK(std::abs(vals[0]) < 1e-12);
}

TEST_CASE("phantom_fourier: shifted circ matches the quadrature oracle") {
  PhantomSpec p{{make(Shape::circ, 5, 0, 6, 6, 1.0)}};
  SampleSet s(2, {0.1, 0.0, 0.07, -0.11, 0.0, 0.3, 0.21, 0.17});
  auto vals = phantom_fourier(p, s);
  for (std::size_t m = 0; m < s.size(); ++m) {
    const auto ref = disk_ft_oracle(6, 5, 0, s.coord(m, 0), s.coord(m, 1));
    CHECK(std::abs(vals[m] - ref) <= 1e-6 * std::abs(ref));
  }
}

TEST_CASE("phantom_fourier: conjugate symmetry for real phantoms") {
  PhantomSpec p{{make(Shape::tri, -4, 3, 5, 7, 1.0), make(Shape::circ, 6, -2, 4, 4, 0.8),
                 make(Shape::rect, 1, 5, 9, 3, 1.2)}};
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uk(-0.5, 0.5);
  std::vector<double> coords;
  for (int i = 0; i < 25; ++i) {
    const double kx = uk(rng), ky = uk(rng);
    coords.insert(coords.end(), {kx, ky});
    coords.insert(coords.end(), {-kx, -ky});
  }
  SampleSet s(2, std::move(coords));
  auto vals = phantom_fourier(p, s);
  for (std::size_t m = 0; m < s.size(); m += 2) {
    CHECK(vals[m + 1].real() == doctest::Approx(vals[m].real()).epsilon(1e-13));
    CHECK(vals[m + 1].imag() == doctest::Approx(-vals[m].imag()).epsilon(1e-13));
  }
}

TEST_CASE("phantom_fourier: DC equals analytic area and the raster Riemann sum") {
  // Shapes scaled so pixel-center sampling is essentially exact: odd-side
  // rect (edges between pixels), integer tri breakpoints, large circ radius.
  SampleSet dc(2, {0.0, 0.0});

  PhantomSpec rect{{make(Shape::rect, 10, -20, 81, 45, 1.0)}};
  CHECK(phantom_fourier(rect, dc)[0].real() == doctest::Approx(81.0 * 45.0).epsilon(1e-13));
  auto rect_img = phantom_image(rect, 256, 256);
  double sum = 0;
  for (double v : rect_img.data) sum += v;
  CHECK(sum == doctest::Approx(81.0 * 45.0).epsilon(1e-12));

  PhantomSpec tri{{make(Shape::tri, -8, 5, 40, 30, 1.0)}};
  CHECK(phantom_fourier(tri, dc)[0].real() == doctest::Approx(40.0 * 30.0).epsilon(1e-13));
  auto tri_img = phantom_image(tri, 128, 128);
  sum = 0;
  for (double v : tri_img.data) sum += v;
  CHECK(sum == doctest::Approx(40.0 * 30.0).epsilon(1e-12));

  PhantomSpec circ{{make(Shape::circ, 13, -22, 400, 400, 1.0)}};
  CHECK(phantom_fourier(circ, dc)[0].real() ==
        doctest::Approx(kPi * 400.0 * 400.0).epsilon(1e-13));
  auto circ_img = phantom_image(circ, 1024, 1024);
  sum = 0;
  for (double v : circ_img.data) sum += v;
  CHECK(sum == doctest::Approx(kPi * 400.0 * 400.0).epsilon(1e-3));
}

TEST_CASE("phantom_fourier: linearity over components") {
  PhantomComponent a = make(Shape::tri, -4, 3, 5, 7, 1.0);
  PhantomComponent b = make(Shape::rect, 2, -1, 6, 9, -0.5);
  SampleSet s(2, {0.11, -0.2, 0.31, 0.07, -0.45, 0.02});
  auto va = phantom_fourier(PhantomSpec{{a}}, s);
  auto vb = phantom_fourier(PhantomSpec{{b}}, s);
  auto vab = phantom_fourier(PhantomSpec{{a, b}}, s);
  for (std::size_t m = 0; m < s.size(); ++m)
    CHECK(std::abs(vab[m] - (va[m] + vb[m])) <= 1e-13 * (1.0 + std::abs(vab[m])));
}

TEST_CASE("phantom spec JSON round trip") {
  PhantomSpec p{{make(Shape::tri, -14, -15, 11, 11, 1.0), make(Shape::circ, 15, -12, 10, 10, 0.8),
                 make(Shape::rect, -10, 16, 26, 9, 0.9)}};
  auto q = PhantomSpec::from_json(p.to_json());
  REQUIRE(q.components.size() == p.components.size());
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    CHECK(q.components[i].shape == p.components[i].shape);
    CHECK(q.components[i].center == p.components[i].center);
    CHECK(q.components[i].scale == p.components[i].scale);
    CHECK(q.components[i].amplitude == p.components[i].amplitude);
  }
  CHECK_THROWS(PhantomSpec::from_json("{\"components\": [{\"shape\":\"blob\"}]}"));
}
