#pragma once

#include <filesystem>
#include <variant>

#include "gridkit/image.hpp"

namespace gridkit {

/// Raster files are little-endian 64-bit floats, row-major (complex data
/// interleaved re,im), with a JSON sidecar at <path>.json recording
/// {"width","height","dtype":"f64","complex","layout":"row-major",
///  "interleaved"}.
void write_image(const std::filesystem::path& path, const RealImage& img);
void write_image(const std::filesystem::path& path, const ComplexImage& img);

using AnyImage = std::variant<RealImage, ComplexImage>;
AnyImage read_image(const std::filesystem::path& path);

/// Real view of a loaded image: real data as-is, complex data by magnitude.
RealImage as_real_magnitude(const AnyImage& img);
ComplexImage as_complex(const AnyImage& img);

/// 16-bit binary PGM with linear min-max scaling; the scaling interval is
/// recorded in a <path>.json sidecar.
void write_pgm16(const std::filesystem::path& path, const RealImage& img);

}  // namespace gridkit
