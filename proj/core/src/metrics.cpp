#include "gridkit/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gridkit/numeric.hpp"
#include "gridkit/parallel.hpp"

namespace gridkit {

namespace {

void check_same_size(const RealImage& a, const RealImage& b, const char* op) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument(std::string(op) + ": image dimensions must match");
}

}  // namespace

double mse(const RealImage& a, const RealImage& b) {
  check_same_size(a, b, "mse");
  // Row sums first, rows combined in index order: worker-count independent.
  std::vector<double> row_sums(static_cast<std::size_t>(a.height), 0.0);
  parallel_for(0, a.height, [&](std::int64_t j0, std::int64_t j1) {
    for (std::int64_t j = j0; j < j1; ++j) {
      double s = 0.0;
      const double* pa = a.data.data() + static_cast<std::size_t>(j) * a.width;
      const double* pb = b.data.data() + static_cast<std::size_t>(j) * a.width;
      for (int i = 0; i < a.width; ++i) {
        const double d = pa[i] - pb[i];
        s += d * d;
      }
      row_sums[static_cast<std::size_t>(j)] = s;
    }
  });
  return fixed_block_sum(row_sums) / static_cast<double>(a.pixels());
}

double ssim(const RealImage& a, const RealImage& b, const SsimParams& params) {
  check_same_size(a, b, "ssim");
  const int win = params.window;
  if (win < 1 || win % 2 == 0) throw std::invalid_argument("ssim: window must be odd and >= 1");
  if (a.width < win || a.height < win)
    throw std::invalid_argument("ssim: images smaller than the window");

  // Truncated Gaussian window, renormalized to unit sum.
  std::vector<double> g(static_cast<std::size_t>(win) * win);
  {
    const int h = win / 2;
    double total = 0.0;
    for (int dy = -h; dy <= h; ++dy)
      for (int dx = -h; dx <= h; ++dx) {
        const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * params.sigma * params.sigma));
        g[static_cast<std::size_t>(dy + h) * win + (dx + h)] = v;
        total += v;
      }
    for (double& v : g) v /= total;
  }

  double range = params.dynamic_range;
  if (range <= 0) {
    for (double v : a.data) range = std::max(range, std::abs(v));
    if (range == 0) range = 1.0;
  }
  const double c1 = params.k1 * range * params.k1 * range;
  const double c2 = params.k2 * range * params.k2 * range;

  const int nx = a.width - win + 1;
  const int ny = a.height - win + 1;
  std::vector<double> row_sums(static_cast<std::size_t>(ny), 0.0);
  parallel_for(0, ny, [&](std::int64_t jj0, std::int64_t jj1) {
    for (std::int64_t wy = jj0; wy < jj1; ++wy) {
      double rs = 0.0;
      for (int wx = 0; wx < nx; ++wx) {
        double mu_a = 0.0, mu_b = 0.0;
        for (int dy = 0; dy < win; ++dy)
          for (int dx = 0; dx < win; ++dx) {
            const double wgt = g[static_cast<std::size_t>(dy) * win + dx];
            mu_a += wgt * a.at(wx + dx, static_cast<int>(wy) + dy);
            mu_b += wgt * b.at(wx + dx, static_cast<int>(wy) + dy);
          }
        double var_a = 0.0, var_b = 0.0, cov = 0.0;
        for (int dy = 0; dy < win; ++dy)
          for (int dx = 0; dx < win; ++dx) {
            const double wgt = g[static_cast<std::size_t>(dy) * win + dx];
            const double da = a.at(wx + dx, static_cast<int>(wy) + dy) - mu_a;
            const double db = b.at(wx + dx, static_cast<int>(wy) + dy) - mu_b;
            var_a += wgt * da * da;
            var_b += wgt * db * db;
            cov += wgt * da * db;
          }
        // Numerator and denominator share structure so that a == b gives
        // exactly 1 in floating point.
        const double num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2);
        const double den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2);
        rs += num / den;
      }
      row_sums[static_cast<std::size_t>(wy)] = rs;
    }
  });
  return fixed_block_sum(row_sums) / (static_cast<double>(nx) * ny);
}

namespace {

template <typename T>
double nrmse_impl(const Image<T>& test, const Image<T>& ref) {
  if (test.width != ref.width || test.height != ref.height)
    throw std::invalid_argument("nrmse: image dimensions must match");
  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < ref.data.size(); ++n) {
    const double d = std::abs(test.data[n] - ref.data[n]);
    num += d * d;
    den += std::abs(ref.data[n]) * std::abs(ref.data[n]);
  }
  if (den == 0.0) throw std::invalid_argument("nrmse: reference image is identically zero");
  return std::sqrt(num / den);
}

}  // namespace

double nrmse(const ComplexImage& test, const ComplexImage& ref) { return nrmse_impl(test, ref); }
double nrmse(const RealImage& test, const RealImage& ref) { return nrmse_impl(test, ref); }

}  // namespace gridkit
