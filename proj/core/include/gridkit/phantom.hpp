#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gridkit/image.hpp"
#include "gridkit/sample_set.hpp"

namespace gridkit {

enum class Shape { tri, circ, rect };

/// One analytic component.  scale is the per-axis width parameter in pixels:
/// tri(u) = max(0, 1-|u|) per axis with u = (x-center)/scale (support
/// 2*scale wide), rect covers |u| <= 1/2 per axis (support scale wide), and
/// circ covers ||u|| <= 1 with scale = (radius, radius).
struct PhantomComponent {
  Shape shape = Shape::rect;
  std::array<double, 2> center{0, 0};
  std::array<double, 2> scale{1, 1};
  double amplitude = 1.0;
};

struct PhantomSpec {
  std::vector<PhantomComponent> components;

  static PhantomSpec from_json(const std::string& text);
  static PhantomSpec from_json_file(const std::filesystem::path& path);
  std::string to_json() const;

  /// Per-axis support interval [lo, hi] of one component.
  static std::array<std::array<double, 2>, 2> support(const PhantomComponent& c);
};

/// Point-samples the component sum at pixel centers.  Throws
/// std::invalid_argument if any component support leaves the grid box
/// [-width/2, width/2] x [-height/2, height/2].
RealImage phantom_image(const PhantomSpec& p, int width, int height);

/// Exact spectrum at the sample locations under F(k) = Int f(x) e^{-i2pi kx} dx:
/// per axis, tri -> a sinc^2(a k), rect -> a sinc(a k); circ of radius a ->
/// a J1(2 pi a rho)/rho (pi a^2 at rho = 0); each times amplitude and the
/// shift phase e^{-i2pi k.center}.
std::vector<std::complex<double>> phantom_fourier(const PhantomSpec& p, const SampleSet& s);

/// Validates supports against the box [-half_fov[d], half_fov[d]].
void check_phantom_support(const PhantomSpec& p, std::span<const double> half_fov);

}  // namespace gridkit
