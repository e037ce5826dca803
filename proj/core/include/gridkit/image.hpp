#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gridkit {

/// Row-major raster with pixel-centered coordinates.  Pixel (i, j) sits at
/// x = (i - floor(width/2), j - floor(height/2)), so index floor(width/2)
/// carries coordinate 0 and even sizes match the centered-DFT convention.
template <typename T>
struct Image {
  int width = 0;
  int height = 0;
  std::vector<T> data;  // data[j*width + i]

  Image() = default;
  Image(int w, int h, T fill = T{}) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("Image: size must be >= 1");
    data.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
  }

  T& at(int i, int j) { return data[static_cast<std::size_t>(j) * width + i]; }
  const T& at(int i, int j) const { return data[static_cast<std::size_t>(j) * width + i]; }

  double xcoord(int i) const { return i - width / 2; }
  double ycoord(int j) const { return j - height / 2; }

  std::size_t pixels() const { return data.size(); }
};

using RealImage = Image<double>;
using ComplexImage = Image<std::complex<double>>;

inline RealImage magnitude_image(const ComplexImage& img) {
  RealImage out(img.width, img.height);
  for (std::size_t n = 0; n < img.data.size(); ++n) out.data[n] = std::abs(img.data[n]);
  return out;
}

}  // namespace gridkit
