#include "gridkit/image_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "gridkit/errors.hpp"

namespace gridkit {

namespace {

static_assert(std::endian::native == std::endian::little,
              "image files are little-endian; byte swapping is not implemented");

void write_sidecar(const std::filesystem::path& path, int width, int height, bool is_complex) {
  nlohmann::json j{{"width", width},        {"height", height},
                   {"dtype", "f64"},        {"complex", is_complex},
                   {"layout", "row-major"}, {"interleaved", is_complex}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
}

void write_raw(const std::filesystem::path& path, const void* data, std::size_t bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
  if (!out) throw IoError("write failed: " + path.string());
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  return std::filesystem::path(path.string() + ".json");
}

}  // namespace

void write_image(const std::filesystem::path& path, const RealImage& img) {
  write_raw(path, img.data.data(), img.data.size() * sizeof(double));
  write_sidecar(sidecar_path(path), img.width, img.height, false);
}

void write_image(const std::filesystem::path& path, const ComplexImage& img) {
  write_raw(path, img.data.data(), img.data.size() * sizeof(std::complex<double>));
  write_sidecar(sidecar_path(path), img.width, img.height, true);
}

AnyImage read_image(const std::filesystem::path& path) {
  std::ifstream meta(sidecar_path(path), std::ios::binary);
  if (!meta) throw IoError("cannot open sidecar: " + sidecar_path(path).string());
  nlohmann::json j;
  try {
    meta >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad sidecar " + sidecar_path(path).string() + ": " + e.what());
  }
  int width = 0, height = 0;
  bool is_complex = false;
  try {
    width = j.at("width").get<int>();
    height = j.at("height").get<int>();
    is_complex = j.at("complex").get<bool>();
    if (j.at("dtype").get<std::string>() != "f64" ||
        j.at("layout").get<std::string>() != "row-major")
      throw IoError("unsupported raster layout in " + sidecar_path(path).string());
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad sidecar " + sidecar_path(path).string() + ": " + e.what());
  }
  if (width < 1 || height < 1) throw IoError("bad raster size in " + sidecar_path(path).string());

  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (is_complex) {
    ComplexImage img(width, height);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(n * sizeof(std::complex<double>)));
    if (static_cast<std::size_t>(in.gcount()) != n * sizeof(std::complex<double>))
      throw IoError("short read: " + path.string());
    return img;
  }
  RealImage img(width, height);
  in.read(reinterpret_cast<char*>(img.data.data()),
          static_cast<std::streamsize>(n * sizeof(double)));
  if (static_cast<std::size_t>(in.gcount()) != n * sizeof(double))
    throw IoError("short read: " + path.string());
  return img;
}

RealImage as_real_magnitude(const AnyImage& img) {
  if (std::holds_alternative<RealImage>(img)) return std::get<RealImage>(img);
  return magnitude_image(std::get<ComplexImage>(img));
}

ComplexImage as_complex(const AnyImage& img) {
  if (std::holds_alternative<ComplexImage>(img)) return std::get<ComplexImage>(img);
  const RealImage& r = std::get<RealImage>(img);
  ComplexImage out(r.width, r.height);
  for (std::size_t n = 0; n < r.data.size(); ++n) out.data[n] = r.data[n];
  return out;
}

void write_pgm16(const std::filesystem::path& path, const RealImage& img) {
  double lo = img.data.empty() ? 0.0 : img.data[0];
  double hi = lo;
  for (double v : img.data) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "P5\n" << img.width << ' ' << img.height << "\n65535\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(img.width) * 2);
  for (int j = 0; j < img.height; ++j) {
    for (int i = 0; i < img.width; ++i) {
      const double t = (img.at(i, j) - lo) / span;
      const auto q = static_cast<std::uint16_t>(std::lround(t * 65535.0));
      row[static_cast<std::size_t>(i) * 2] = static_cast<unsigned char>(q >> 8);
      row[static_cast<std::size_t>(i) * 2 + 1] = static_cast<unsigned char>(q & 0xff);
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw IoError("write failed: " + path.string());

  nlohmann::json j{{"min", lo}, {"max", hi}, {"width", img.width}, {"height", img.height}};
  std::ofstream side(sidecar_path(path), std::ios::binary);
  if (!side) throw IoError("cannot open for writing: " + sidecar_path(path).string());
  side << j.dump(2) << '\n';
}

}  // namespace gridkit
