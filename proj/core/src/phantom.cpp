#include "gridkit/phantom.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gridkit/bessel.hpp"
#include "gridkit/errors.hpp"
#include "gridkit/parallel.hpp"

namespace gridkit {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double u) {
  if (u == 0.0) return 1.0;
  return std::sin(kPi * u) / (kPi * u);
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::tri:
      return "tri";
    case Shape::circ:
      return "circ";
    case Shape::rect:
      return "rect";
  }
  return "rect";
}

Shape shape_from_name(const std::string& name) {
  if (name == "tri") return Shape::tri;
  if (name == "circ") return Shape::circ;
  if (name == "rect") return Shape::rect;
  throw std::invalid_argument("PhantomSpec: unknown shape \"" + name + "\"");
}

void validate_component(const PhantomComponent& c) {
  if (!(c.scale[0] > 0) || !(c.scale[1] > 0))
    throw std::invalid_argument("PhantomSpec: scales must be > 0");
  if (!std::isfinite(c.amplitude) || !std::isfinite(c.center[0]) || !std::isfinite(c.center[1]))
    throw std::invalid_argument("PhantomSpec: center and amplitude must be finite");
  if (c.shape == Shape::circ && c.scale[0] != c.scale[1])
    throw std::invalid_argument("PhantomSpec: circ takes a single radius (equal scales)");
}

double component_value(const PhantomComponent& c, double x, double y) {
  const double ux = (x - c.center[0]) / c.scale[0];
  const double uy = (y - c.center[1]) / c.scale[1];
  switch (c.shape) {
    case Shape::tri:
      return c.amplitude * std::max(0.0, 1.0 - std::abs(ux)) * std::max(0.0, 1.0 - std::abs(uy));
    case Shape::rect:
      return (std::abs(ux) <= 0.5 && std::abs(uy) <= 0.5) ? c.amplitude : 0.0;
    case Shape::circ:
      return (ux * ux + uy * uy <= 1.0) ? c.amplitude : 0.0;
  }
  return 0.0;
}

}  // namespace

std::array<std::array<double, 2>, 2> PhantomSpec::support(const PhantomComponent& c) {
  std::array<std::array<double, 2>, 2> box{};
  for (int d = 0; d < 2; ++d) {
    const auto i = static_cast<std::size_t>(d);
    double half = 0.0;
    switch (c.shape) {
      case Shape::tri:
        half = c.scale[i];
        break;
      case Shape::rect:
        half = 0.5 * c.scale[i];
        break;
      case Shape::circ:
        half = c.scale[i];
        break;
    }
    box[i] = {c.center[i] - half, c.center[i] + half};
  }
  return box;
}

void check_phantom_support(const PhantomSpec& p, std::span<const double> half_fov) {
  if (half_fov.size() != 2)
    throw std::invalid_argument("check_phantom_support: expected 2 half-extents");
  for (const auto& c : p.components) {
    const auto box = PhantomSpec::support(c);
    for (int d = 0; d < 2; ++d) {
      const auto i = static_cast<std::size_t>(d);
      if (box[i][0] < -half_fov[i] || box[i][1] > half_fov[i])
        throw std::invalid_argument("phantom component support exceeds the field of view box");
    }
  }
}

RealImage phantom_image(const PhantomSpec& p, int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("phantom_image: size must be >= 1");
  for (const auto& c : p.components) validate_component(c);
  const double half[2] = {width / 2.0, height / 2.0};
  check_phantom_support(p, std::span<const double>(half, 2));

  RealImage img(width, height);
  parallel_for(0, height, [&](std::int64_t j0, std::int64_t j1) {
    for (std::int64_t j = j0; j < j1; ++j) {
      const double y = img.ycoord(static_cast<int>(j));
      for (int i = 0; i < width; ++i) {
        const double x = img.xcoord(i);
        double v = 0.0;
        for (const auto& c : p.components) v += component_value(c, x, y);
        img.at(i, static_cast<int>(j)) = v;
      }
    }
  });
  return img;
}

std::vector<std::complex<double>> phantom_fourier(const PhantomSpec& p, const SampleSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("phantom_fourier: sample set must be 2-D");
  for (const auto& c : p.components) validate_component(c);

  const std::size_t m = s.size();
  std::vector<std::complex<double>> out(m);
  parallel_for(0, static_cast<std::int64_t>(m), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t n = lo; n < hi; ++n) {
      const double kx = s.coord(static_cast<std::size_t>(n), 0);
      const double ky = s.coord(static_cast<std::size_t>(n), 1);
      std::complex<double> acc{0.0, 0.0};
      for (const auto& c : p.components) {
        double mag = 0.0;
        switch (c.shape) {
          case Shape::tri: {
            const double fx = c.scale[0] * sinc(c.scale[0] * kx) * sinc(c.scale[0] * kx);
            const double fy = c.scale[1] * sinc(c.scale[1] * ky) * sinc(c.scale[1] * ky);
            mag = fx * fy;
            break;
          }
          case Shape::rect: {
            mag = c.scale[0] * sinc(c.scale[0] * kx) * c.scale[1] * sinc(c.scale[1] * ky);
            break;
          }
          case Shape::circ: {
            const double a = c.scale[0];
            const double rho = std::hypot(kx, ky);
            mag = rho == 0.0 ? kPi * a * a : a * bessel_j1(2.0 * kPi * a * rho) / rho;
            break;
          }
        }
        const double phase = -2.0 * kPi * (kx * c.center[0] + ky * c.center[1]);
        acc += c.amplitude * mag * std::complex<double>(std::cos(phase), std::sin(phase));
      }
      out[static_cast<std::size_t>(n)] = acc;
    }
  });
  return out;
}

PhantomSpec PhantomSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("PhantomSpec: bad JSON: ") + e.what());
  }
  PhantomSpec spec;
  if (!j.contains("components") || !j["components"].is_array())
    throw std::invalid_argument("PhantomSpec: missing \"components\" array");
  for (const auto& cj : j["components"]) {
    PhantomComponent c;
    c.shape = shape_from_name(cj.at("shape").get<std::string>());
    c.center = {cj.at("center").at(0).get<double>(), cj.at("center").at(1).get<double>()};
    if (cj.at("scale").is_array()) {
      c.scale = {cj.at("scale").at(0).get<double>(), cj.at("scale").at(1).get<double>()};
    } else {
      const double r = cj.at("scale").get<double>();
      c.scale = {r, r};
    }
    c.amplitude = cj.at("amplitude").get<double>();
    validate_component(c);
    spec.components.push_back(c);
  }
  return spec;
}

PhantomSpec PhantomSpec::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open phantom spec: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string PhantomSpec::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    comps.push_back({{"shape", shape_name(c.shape)},
                     {"center", {c.center[0], c.center[1]}},
                     {"scale", {c.scale[0], c.scale[1]}},
                     {"amplitude", c.amplitude}});
  }
  return nlohmann::json{{"components", comps}}.dump(2) + "\n";
}

}  // namespace gridkit
