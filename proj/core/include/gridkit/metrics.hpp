#pragma once

#include "gridkit/image.hpp"

namespace gridkit {

/// Mean over pixels of (a - b)^2.  Complex reconstructions are scored on
/// magnitude images; convert with magnitude_image first.
double mse(const RealImage& a, const RealImage& b);

struct SsimParams {
  int window = 11;            // Gaussian window side (truncated, unit sum)
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 0;   // 0: use max |a| (first argument = reference)
};

/// Mean local structural similarity over all fully-interior window
/// positions (no padding).  Both images must be at least window x window.
/// ssim(a, a) == 1 exactly.
double ssim(const RealImage& a, const RealImage& b, const SsimParams& params = {});

/// Root-mean-square error of (test - ref) normalized by the RMS of ref.
double nrmse(const ComplexImage& test, const ComplexImage& ref);
double nrmse(const RealImage& test, const RealImage& ref);

}  // namespace gridkit
