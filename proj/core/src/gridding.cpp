#include "gridkit/gridding.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

#include "gridkit/parallel.hpp"

namespace gridkit {

namespace {

constexpr double kPi = std::numbers::pi;

int oversampled_size(int n, double alpha) {
  int g = static_cast<int>(std::ceil(alpha * n));
  if (g % 2 != 0) ++g;  // even size keeps the centered wrap exact
  return g;
}

// FFTW planning is not thread-safe; execution of a private plan is.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

void rotate_half(ComplexImage& img) {
  // Swap quadrants (even sizes): index shift by half per axis.
  const int hw = img.width / 2, hh = img.height / 2;
  ComplexImage tmp(img.width, img.height);
  for (int j = 0; j < img.height; ++j) {
    const int js = (j + hh) % img.height;
    for (int i = 0; i < img.width; ++i) tmp.at(i, j) = img.at((i + hw) % img.width, js);
  }
  img.data.swap(tmp.data);
}

}  // namespace

ComplexImage centered_inverse_dft(const ComplexImage& grid, bool normalize) {
  if (grid.width % 2 != 0 || grid.height % 2 != 0)
    throw std::invalid_argument("centered_inverse_dft: grid sizes must be even");

  ComplexImage shifted = grid;
  rotate_half(shifted);

  ComplexImage out(grid.width, grid.height);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_plan plan = fftw_plan_dft_2d(
        grid.height, grid.width, reinterpret_cast<fftw_complex*>(shifted.data.data()),
        reinterpret_cast<fftw_complex*>(out.data.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  rotate_half(out);

  if (normalize) {
    const double scale = 1.0 / (static_cast<double>(grid.width) * grid.height);
    for (auto& z : out.data) z *= scale;
  }
  return out;
}

double kb_spatial_transform(double x, const KernelSpec& spec, int grid_size) {
  spec.validate();
  if (grid_size < 1) throw std::invalid_argument("kb_spatial_transform: grid_size must be >= 1");
  const double q = kPi * spec.width * x / grid_size;
  const double d2 = spec.beta * spec.beta - q * q;
  double v;
  if (d2 > 0) {
    const double r = std::sqrt(d2);
    v = std::sinh(r) / r;
  } else if (d2 < 0) {
    const double r = std::sqrt(-d2);
    v = std::sin(r) / r;
  } else {
    v = 1.0;
  }
  return spec.unit_integral ? v / spec.integral_unnormalized() : v;
}

ComplexImage grid_recon(const FourierSamples& f, std::span<const double> w, int width,
                        int height, double alpha, const KernelSpec& spec) {
  if (w.size() != f.set.size())
    throw std::invalid_argument("grid_recon: weight length must equal the sample count");
  if (f.set.dim() != 2) throw std::invalid_argument("grid_recon: sample set must be 2-D");
  if (width < 1 || height < 1) throw std::invalid_argument("grid_recon: size must be >= 1");
  if (!(alpha >= 1.0)) throw std::invalid_argument("grid_recon: alpha must be >= 1");
  spec.validate();

  const int gx = oversampled_size(width, alpha);
  const int gy = oversampled_size(height, alpha);
  const double half_w = 0.5 * spec.width;
  const int reach = static_cast<int>(std::floor(half_w)) + 1;

  ComplexImage grid(gx, gy);
  const std::size_t m = f.set.size();

  // Spreading runs on disjoint bands of grid rows; each band sees every
  // sample in index order, so cell sums are independent of the worker count.
  const int nbands = std::max(1, std::min(max_threads(), gy));
  parallel_for(0, nbands, [&](std::int64_t b0, std::int64_t b1) {
    for (std::int64_t band = b0; band < b1; ++band) {
      const int row_lo = static_cast<int>(band * gy / nbands);
      const int row_hi = static_cast<int>((band + 1) * gy / nbands);
      for (std::size_t mi = 0; mi < m; ++mi) {
        const std::complex<double> v = w[mi] * f.values[mi];
        if (v == std::complex<double>(0.0, 0.0)) continue;
        const double ux = f.set.coord(mi, 0) * gx + gx / 2;
        const double uy = f.set.coord(mi, 1) * gy + gy / 2;
        const int px_lo = static_cast<int>(std::ceil(ux - half_w));
        const int py_lo = static_cast<int>(std::ceil(uy - half_w));
        for (int py = py_lo; py <= py_lo + 2 * reach; ++py) {
          const double dy = py - uy;
          if (dy < -half_w || dy > half_w) continue;
          const int row = ((py % gy) + gy) % gy;
          if (row < row_lo || row >= row_hi) continue;
          const double cy = kaiser_bessel(dy, spec);
          for (int px = px_lo; px <= px_lo + 2 * reach; ++px) {
            const double dx = px - ux;
            if (dx < -half_w || dx > half_w) continue;
            const int col = ((px % gx) + gx) % gx;
            grid.at(col, row) += v * (cy * kaiser_bessel(dx, spec));
          }
        }
      }
    }
  });

  ComplexImage os_img = centered_inverse_dft(grid, /*normalize=*/false);

  // Deapodize and crop in one pass.
  ComplexImage out(width, height);
  std::vector<double> cx(static_cast<std::size_t>(width)), cyv(static_cast<std::size_t>(height));
  for (int i = 0; i < width; ++i) {
    double den = kb_spatial_transform(i - width / 2, spec, gx);
    if (std::abs(den) < 1e-8) den = den < 0 ? -1e-8 : 1e-8;
    cx[static_cast<std::size_t>(i)] = den;
  }
  for (int j = 0; j < height; ++j) {
    double den = kb_spatial_transform(j - height / 2, spec, gy);
    if (std::abs(den) < 1e-8) den = den < 0 ? -1e-8 : 1e-8;
    cyv[static_cast<std::size_t>(j)] = den;
  }
  const int off_x = gx / 2 - width / 2;
  const int off_y = gy / 2 - height / 2;
  parallel_for(0, height, [&](std::int64_t j0, std::int64_t j1) {
    for (std::int64_t j = j0; j < j1; ++j) {
      for (int i = 0; i < width; ++i) {
        out.at(i, static_cast<int>(j)) =
            os_img.at(i + off_x, static_cast<int>(j) + off_y) /
            (cx[static_cast<std::size_t>(i)] * cyv[static_cast<std::size_t>(j)]);
      }
    }
  });
  return out;
}

}  // namespace gridkit
