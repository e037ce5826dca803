#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gridkit/density_weights.hpp"
#include "gridkit/gp_solver.hpp"
#include "gridkit/nudft.hpp"
#include "gridkit/sample_set.hpp"

namespace gridkit {

/// Formats a double with 17 significant digits (round-trips exactly).
std::string format_double(double v);

/// Trajectory CSV: header "kx,ky", one sample per row.
void write_trajectory_csv(const std::filesystem::path& path, const SampleSet& s);
SampleSet read_trajectory_csv(const std::filesystem::path& path);

/// Fourier sample CSV: header "kx,ky,re,im".
void write_samples_csv(const std::filesystem::path& path, const FourierSamples& f);
FourierSamples read_samples_csv(const std::filesystem::path& path);

/// Weights CSV: provenance comments ("# method=...", "# scale_applied=...",
/// "# params=..."), then header "w" and one value per row.
void write_weights_csv(const std::filesystem::path& path, const DensityWeights& w);
DensityWeights read_weights_csv(const std::filesystem::path& path);

/// Solver trace CSV: header "iter,f0,step,restarted".
void write_trace_csv(const std::filesystem::path& path, std::span<const TraceRow> trace);

struct MetricsRow {
  std::string image;
  std::string method;
  double mse = 0.0;
  double ssim = 0.0;
  double runtime_seconds = 0.0;
};

/// Metrics report CSV: header "image,method,mse,ssim,runtime_seconds".
void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricsRow> rows);

}  // namespace gridkit
