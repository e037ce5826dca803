#include "gridkit/nudft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gridkit/parallel.hpp"

namespace gridkit {

namespace {

constexpr double kPi = std::numbers::pi;
// Samples are processed in fixed-size chunks so the per-chunk phase tables
// stay small; accumulation order over m is globally fixed, which keeps the
// output independent of the worker count.
constexpr std::size_t kSampleChunk = 512;

std::complex<double> unit_phase(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

// Per-axis phase tables e^{sign * i2pi k * x} for one chunk of samples.
struct PhaseTables {
  std::vector<std::complex<double>> px, py;  // chunk-major: [c*width + i]

  void build(const SampleSet& s, std::size_t lo, std::size_t hi, const ComplexImage& shape,
             double sign) {
    const std::size_t n = hi - lo;
    px.resize(n * static_cast<std::size_t>(shape.width));
    py.resize(n * static_cast<std::size_t>(shape.height));
    for (std::size_t c = 0; c < n; ++c) {
      const double kx = s.coord(lo + c, 0);
      const double ky = s.coord(lo + c, 1);
      for (int i = 0; i < shape.width; ++i)
        px[c * shape.width + static_cast<std::size_t>(i)] =
            unit_phase(sign * 2.0 * kPi * kx * shape.xcoord(i));
      for (int j = 0; j < shape.height; ++j)
        py[c * shape.height + static_cast<std::size_t>(j)] =
            unit_phase(sign * 2.0 * kPi * ky * shape.ycoord(j));
    }
  }
};

}  // namespace

FourierSamples::FourierSamples(SampleSet s, std::vector<std::complex<double>> v)
    : set(std::move(s)), values(std::move(v)) {
  if (values.size() != set.size())
    throw std::invalid_argument("FourierSamples: values length must equal the sample count");
  for (const auto& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("FourierSamples: values must be finite");
}

ComplexImage nudft_type1(const FourierSamples& f, std::span<const double> w, int width,
                         int height) {
  if (w.size() != f.set.size())
    throw std::invalid_argument("nudft_type1: weight length must equal the sample count");
  if (f.set.dim() != 2) throw std::invalid_argument("nudft_type1: sample set must be 2-D");
  ComplexImage out(width, height);

  const std::size_t m = f.set.size();
  for (std::size_t lo = 0; lo < m; lo += kSampleChunk) {
    const std::size_t hi = std::min(m, lo + kSampleChunk);
    PhaseTables t;
    t.build(f.set, lo, hi, out, +1.0);
    parallel_for(0, height, [&](std::int64_t j0, std::int64_t j1) {
      for (std::int64_t j = j0; j < j1; ++j) {
        std::complex<double>* row = out.data.data() + static_cast<std::size_t>(j) * width;
        for (std::size_t c = 0; c < hi - lo; ++c) {
          const std::complex<double> a =
              w[lo + c] * f.values[lo + c] * t.py[c * static_cast<std::size_t>(height) +
                                                  static_cast<std::size_t>(j)];
          const std::complex<double>* px = t.px.data() + c * static_cast<std::size_t>(width);
          for (int i = 0; i < width; ++i) row[i] += a * px[i];
        }
      }
    });
  }
  return out;
}

namespace {

std::vector<std::complex<double>> type2_impl(const ComplexImage& img, const SampleSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("nudft_type2: sample set must be 2-D");
  for (const auto& z : img.data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("nudft_type2: image must be finite");

  const std::size_t m = s.size();
  std::vector<std::complex<double>> out(m);
  parallel_for(0, static_cast<std::int64_t>(m), [&](std::int64_t lo, std::int64_t hi) {
    std::vector<std::complex<double>> px(static_cast<std::size_t>(img.width));
    std::vector<std::complex<double>> py(static_cast<std::size_t>(img.height));
    for (std::int64_t n = lo; n < hi; ++n) {
      const double kx = s.coord(static_cast<std::size_t>(n), 0);
      const double ky = s.coord(static_cast<std::size_t>(n), 1);
      for (int i = 0; i < img.width; ++i)
        px[static_cast<std::size_t>(i)] = unit_phase(-2.0 * kPi * kx * img.xcoord(i));
      for (int j = 0; j < img.height; ++j)
        py[static_cast<std::size_t>(j)] = unit_phase(-2.0 * kPi * ky * img.ycoord(j));
      std::complex<double> acc{0.0, 0.0};
      for (int j = 0; j < img.height; ++j) {
        const std::complex<double>* row = img.data.data() + static_cast<std::size_t>(j) * img.width;
        std::complex<double> rowsum{0.0, 0.0};
        for (int i = 0; i < img.width; ++i) rowsum += row[i] * px[static_cast<std::size_t>(i)];
        acc += rowsum * py[static_cast<std::size_t>(j)];
      }
      out[static_cast<std::size_t>(n)] = acc;
    }
  });
  return out;
}

}  // namespace

std::vector<std::complex<double>> nudft_type2(const ComplexImage& img, const SampleSet& s) {
  return type2_impl(img, s);
}

std::vector<std::complex<double>> nudft_type2(const RealImage& img, const SampleSet& s) {
  ComplexImage c(img.width, img.height);
  for (std::size_t n = 0; n < img.data.size(); ++n) c.data[n] = img.data[n];
  return type2_impl(c, s);
}

std::vector<std::complex<double>> psf_eval(const SampleSet& s, std::span<const double> w,
                                           std::span<const double> points) {
  if (w.size() != s.size())
    throw std::invalid_argument("psf_eval: weight length must equal the sample count");
  const int d = s.dim();
  if (points.size() % static_cast<std::size_t>(d) != 0)
    throw std::invalid_argument("psf_eval: points array must be a multiple of dim");
  const std::size_t npts = points.size() / static_cast<std::size_t>(d);

  std::vector<std::complex<double>> out(npts);
  parallel_for(0, static_cast<std::int64_t>(npts), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t n = lo; n < hi; ++n) {
      const double* x = points.data() + static_cast<std::size_t>(n) * d;
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t mi = 0; mi < s.size(); ++mi) {
        double dot = 0.0;
        for (int k = 0; k < d; ++k) dot += s.coord(mi, k) * x[k];
        acc += w[mi] * unit_phase(-2.0 * kPi * dot);
      }
      out[static_cast<std::size_t>(n)] = acc;
    }
  });
  return out;
}

}  // namespace gridkit
