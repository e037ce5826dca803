#include "gridkit/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridkit/errors.hpp"

namespace gridkit {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // "\n" line endings everywhere
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return in;
}

double parse_double(std::string_view token, const std::filesystem::path& path) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw IoError("bad numeric field \"" + std::string(token) + "\" in " + path.string());
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_trajectory_csv(const std::filesystem::path& path, const SampleSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("write_trajectory_csv: 2-D sets only");
  auto out = open_out(path);
  out << "kx,ky\n";
  for (std::size_t m = 0; m < s.size(); ++m)
    out << format_double(s.coord(m, 0)) << ',' << format_double(s.coord(m, 1)) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

SampleSet read_trajectory_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "kx,ky")
    throw IoError("expected header \"kx,ky\" in " + path.string());
  std::vector<double> coords;
  while (std::getline(in, line)) {
    auto sv = strip_cr(line);
    if (sv.empty()) continue;
    auto fields = split(sv, ',');
    if (fields.size() != 2) throw IoError("expected 2 fields per row in " + path.string());
    coords.push_back(parse_double(fields[0], path));
    coords.push_back(parse_double(fields[1], path));
  }
  if (coords.empty()) throw IoError("no samples in " + path.string());
  return SampleSet(2, std::move(coords));
}

void write_samples_csv(const std::filesystem::path& path, const FourierSamples& f) {
  if (f.set.dim() != 2) throw std::invalid_argument("write_samples_csv: 2-D sets only");
  auto out = open_out(path);
  out << "kx,ky,re,im\n";
  for (std::size_t m = 0; m < f.set.size(); ++m)
    out << format_double(f.set.coord(m, 0)) << ',' << format_double(f.set.coord(m, 1)) << ','
        << format_double(f.values[m].real()) << ',' << format_double(f.values[m].imag()) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

FourierSamples read_samples_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "kx,ky,re,im")
    throw IoError("expected header \"kx,ky,re,im\" in " + path.string());
  std::vector<double> coords;
  std::vector<std::complex<double>> values;
  while (std::getline(in, line)) {
    auto sv = strip_cr(line);
    if (sv.empty()) continue;
    auto fields = split(sv, ',');
    if (fields.size() != 4) throw IoError("expected 4 fields per row in " + path.string());
    coords.push_back(parse_double(fields[0], path));
    coords.push_back(parse_double(fields[1], path));
    values.emplace_back(parse_double(fields[2], path), parse_double(fields[3], path));
  }
  if (values.empty()) throw IoError("no samples in " + path.string());
  return FourierSamples(SampleSet(2, std::move(coords)), std::move(values));
}

void write_weights_csv(const std::filesystem::path& path, const DensityWeights& w) {
  auto out = open_out(path);
  out << "# method=" << to_string(w.method) << '\n';
  out << "# scale_applied=" << format_double(w.scale_applied) << '\n';
  if (!w.params.empty()) out << "# params=" << w.params << '\n';
  out << "w\n";
  for (double v : w.w) out << format_double(v) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

DensityWeights read_weights_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  DensityWeights w;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    auto sv = strip_cr(line);
    if (sv.empty()) continue;
    if (sv.starts_with("# ")) {
      const auto body = sv.substr(2);
      if (body.starts_with("method=")) w.method = dcf_method_from_string(std::string(body.substr(7)));
      if (body.starts_with("scale_applied=")) w.scale_applied = parse_double(body.substr(14), path);
      if (body.starts_with("params=")) w.params = std::string(body.substr(7));
      continue;
    }
    if (!saw_header) {
      if (sv != "w") throw IoError("expected header \"w\" in " + path.string());
      saw_header = true;
      continue;
    }
    w.w.push_back(parse_double(sv, path));
  }
  if (!saw_header || w.w.empty()) throw IoError("no weights in " + path.string());
  return w;
}

void write_trace_csv(const std::filesystem::path& path, std::span<const TraceRow> trace) {
  auto out = open_out(path);
  out << "iter,f0,step,restarted\n";
  for (const auto& row : trace)
    out << row.iter << ',' << format_double(row.f0) << ',' << format_double(row.step) << ','
        << (row.restarted ? 1 : 0) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricsRow> rows) {
  auto out = open_out(path);
  out << "image,method,mse,ssim,runtime_seconds\n";
  for (const auto& r : rows)
    out << r.image << ',' << r.method << ',' << format_double(r.mse) << ','
        << format_double(r.ssim) << ',' << format_double(r.runtime_seconds) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace gridkit
