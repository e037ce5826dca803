#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gridkit/image.hpp"
#include "gridkit/sample_set.hpp"

namespace gridkit {

/// Frequency locations together with the complex values measured there.
struct FourierSamples {
  SampleSet set;
  std::vector<std::complex<double>> values;

  FourierSamples(SampleSet s, std::vector<std::complex<double>> v);
};

/// Direct weighted adjoint transform: out(x_n) = sum_m w_m G_m e^{+i2pi k_m.x_n}
/// at every pixel center of a width x height grid.  O(M N); exact summation.
ComplexImage nudft_type1(const FourierSamples& f, std::span<const double> w, int width,
                         int height);

/// Direct forward transform: G(k_m) = sum_n g(x_n) e^{-i2pi k_m.x_n} over all
/// pixel centers.
std::vector<std::complex<double>> nudft_type2(const ComplexImage& img, const SampleSet& s);
std::vector<std::complex<double>> nudft_type2(const RealImage& img, const SampleSet& s);

/// Point spread function of the weighted sampling distribution at arbitrary
/// continuous locations: s_w(x) = sum_m w_m e^{-i2pi k_m.x}.  points is a
/// flat row-major n_points x dim array.
std::vector<std::complex<double>> psf_eval(const SampleSet& s, std::span<const double> w,
                                           std::span<const double> points);

}  // namespace gridkit
