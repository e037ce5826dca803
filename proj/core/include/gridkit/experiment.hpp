#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gridkit/csv_io.hpp"
#include "gridkit/density_weights.hpp"
#include "gridkit/gp_solver.hpp"
#include "gridkit/kaiser_bessel.hpp"
#include "gridkit/phantom.hpp"

namespace gridkit {

struct TrajectoryConfig {
  std::string kind;  // radial | spiral | propeller | file
  // radial
  std::size_t n_spokes = 0, n_per_spoke = 0;
  // spiral
  std::size_t n_interleaves = 0, n_revolutions = 0, n_per_interleave = 0;
  // propeller
  std::size_t n_angles = 0, lines_per_angle = 0, points_per_line = 0;
  double angle_step_deg = 0.0, line_sep = 0.0;
  double k_max = 0.5;
  std::filesystem::path file;  // kind == "file"
};

/// Full phantom-pipeline configuration.  Relative paths are resolved against
/// the config file's directory.
struct ExperimentConfig {
  TrajectoryConfig trajectory;
  std::filesystem::path phantom_spec;
  std::array<int, 2> image_size{96, 96};
  std::optional<std::array<double, 2>> gamma;  // default 0.25 * size
  std::array<double, 2> eta{1.0, 1.0};
  std::vector<DcfMethod> methods{DcfMethod::voronoi, DcfMethod::fixed_point, DcfMethod::gp};
  GpOptions solver;
  int fp_iters = 8;
  double fp_kernel_width = 4.0;
  double gridding_alpha = 1.5;
  double gridding_kernel_width = 5.0;
  std::filesystem::path output_dir = "out";

  static ExperimentConfig from_json_file(const std::filesystem::path& path);
};

struct MethodReport {
  std::string method;
  double mse = 0.0;
  double ssim = 0.0;
  double runtime_seconds = 0.0;  // density-compensation time; timing only
};

struct ExperimentResult {
  std::vector<MethodReport> reports;
  std::filesystem::path output_dir;
};

/// Runs the whole pipeline: trajectory, truth raster, analytic Fourier
/// samples, one set of density compensation weights per method, gridding
/// reconstruction, error maps and metrics.  Every emitted file except
/// timings.csv is a deterministic function of the config and seed; wall
/// clock timing is segregated into timings.csv.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace gridkit
