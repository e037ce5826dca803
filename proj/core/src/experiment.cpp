#include "gridkit/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "gridkit/errors.hpp"
#include "gridkit/fixed_point.hpp"
#include "gridkit/gridding.hpp"
#include "gridkit/image_io.hpp"
#include "gridkit/metrics.hpp"
#include "gridkit/trajectories.hpp"
#include "gridkit/voronoi.hpp"

namespace gridkit {

namespace {

SampleSet make_trajectory(const TrajectoryConfig& t) {
  if (t.kind == "radial") return radial_trajectory(t.n_spokes, t.n_per_spoke, t.k_max);
  if (t.kind == "spiral")
    return spiral_trajectory(t.n_interleaves, t.n_revolutions, t.n_per_interleave, t.k_max);
  if (t.kind == "propeller")
    return propeller_trajectory(t.n_angles, t.angle_step_deg * std::numbers::pi / 180.0,
                                t.lines_per_angle, t.line_sep, t.points_per_line);
  if (t.kind == "file") return read_trajectory_csv(t.file);
  throw std::invalid_argument("unknown trajectory kind: " + t.kind);
}

RealImage db_error_map(const ComplexImage& recon, const RealImage& truth) {
  RealImage out(truth.width, truth.height);
  for (std::size_t n = 0; n < out.data.size(); ++n) {
    const double err = std::abs(recon.data[n] - truth.data[n]);
    out.data[n] = err > 0 ? std::max(-120.0, 20.0 * std::log10(err)) : -120.0;
  }
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open experiment config: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad experiment config " + path.string() + ": " + e.what());
  }

  const auto base = path.parent_path();
  auto resolve = [&](std::filesystem::path p) { return p.is_absolute() ? p : base / p; };

  ExperimentConfig cfg;
  try {
    const auto& tj = j.at("trajectory");
    cfg.trajectory.kind = tj.at("kind").get<std::string>();
    if (cfg.trajectory.kind == "radial") {
      cfg.trajectory.n_spokes = tj.at("n_spokes").get<std::size_t>();
      cfg.trajectory.n_per_spoke = tj.at("n_per_spoke").get<std::size_t>();
    } else if (cfg.trajectory.kind == "spiral") {
      cfg.trajectory.n_interleaves = tj.at("n_interleaves").get<std::size_t>();
      cfg.trajectory.n_revolutions = tj.at("n_revolutions").get<std::size_t>();
      cfg.trajectory.n_per_interleave = tj.at("n_per_interleave").get<std::size_t>();
    } else if (cfg.trajectory.kind == "propeller") {
      cfg.trajectory.n_angles = tj.at("n_angles").get<std::size_t>();
      cfg.trajectory.angle_step_deg = tj.at("angle_step_deg").get<double>();
      cfg.trajectory.lines_per_angle = tj.at("lines_per_angle").get<std::size_t>();
      cfg.trajectory.line_sep = tj.at("line_sep").get<double>();
      cfg.trajectory.points_per_line = tj.at("points_per_line").get<std::size_t>();
    } else if (cfg.trajectory.kind == "file") {
      cfg.trajectory.file = resolve(tj.at("path").get<std::string>());
    } else {
      throw std::invalid_argument("unknown trajectory kind: " + cfg.trajectory.kind);
    }
    if (tj.contains("k_max")) cfg.trajectory.k_max = tj.at("k_max").get<double>();

    cfg.phantom_spec = resolve(j.at("phantom_spec").get<std::string>());
    cfg.image_size = {j.at("image_size").at(0).get<int>(), j.at("image_size").at(1).get<int>()};
    if (cfg.image_size[0] < 16 || cfg.image_size[1] < 16)
      throw std::invalid_argument("experiment config: image size must be >= 16");
    if (j.contains("gamma"))
      cfg.gamma = {{j.at("gamma").at(0).get<double>(), j.at("gamma").at(1).get<double>()}};
    if (j.contains("eta"))
      cfg.eta = {j.at("eta").at(0).get<double>(), j.at("eta").at(1).get<double>()};
    if (j.contains("methods")) {
      cfg.methods.clear();
      for (const auto& mj : j.at("methods"))
        cfg.methods.push_back(dcf_method_from_string(mj.get<std::string>()));
    }
    if (j.contains("solver")) {
      const auto& sj = j.at("solver");
      if (sj.contains("max_iter")) cfg.solver.max_iter = sj.at("max_iter").get<int>();
      if (sj.contains("obj_tol")) cfg.solver.obj_tol = sj.at("obj_tol").get<double>();
      if (sj.contains("seed")) cfg.solver.seed = sj.at("seed").get<std::uint64_t>();
    }
    if (j.contains("fp_iters")) cfg.fp_iters = j.at("fp_iters").get<int>();
    if (j.contains("fp_kernel_width")) cfg.fp_kernel_width = j.at("fp_kernel_width").get<double>();
    if (j.contains("gridding_alpha")) cfg.gridding_alpha = j.at("gridding_alpha").get<double>();
    if (j.contains("gridding_kernel_width"))
      cfg.gridding_kernel_width = j.at("gridding_kernel_width").get<double>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad experiment config " + path.string() + ": " + e.what());
  }
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.output_dir;
  fs::create_directories(dir);

  const int width = cfg.image_size[0];
  const int height = cfg.image_size[1];

  SampleSet traj = make_trajectory(cfg.trajectory);
  write_trajectory_csv(dir / "trajectory.csv", traj);

  PhantomSpec phantom = PhantomSpec::from_json_file(cfg.phantom_spec);
  RealImage truth = phantom_image(phantom, width, height);
  write_image(dir / "truth.bin", truth);
  write_pgm16(dir / "truth.pgm", truth);

  FourierSamples samples(traj, phantom_fourier(phantom, traj));
  write_samples_csv(dir / "samples.csv", samples);

  PsfConfig psf = PsfConfig::for_image(width, height);
  if (cfg.gamma) psf.gamma = {(*cfg.gamma)[0], (*cfg.gamma)[1]};
  psf.eta = {cfg.eta[0], cfg.eta[1]};

  const KernelSpec grid_kernel =
      KernelSpec::for_gridding(cfg.gridding_kernel_width, cfg.gridding_alpha);
  const KernelSpec fp_kernel =
      KernelSpec::for_gridding(cfg.fp_kernel_width, cfg.gridding_alpha, /*unit_integral=*/true);

  ExperimentResult result;
  result.output_dir = dir;
  std::vector<MetricsRow> comparison;

  for (DcfMethod method : cfg.methods) {
    const std::string name = to_string(method);
    const auto t0 = std::chrono::steady_clock::now();
    DensityWeights weights;
    switch (method) {
      case DcfMethod::voronoi:
        weights = voronoi_weights(traj);
        break;
      case DcfMethod::fixed_point:
        weights = fixed_point_weights(traj, fp_kernel, {width, height}, cfg.fp_iters);
        break;
      case DcfMethod::gp: {
        GpOptions opts = cfg.solver;
        GpSolution sol = solve_gp(traj, psf, opts);
        write_trace_csv(dir / "trace_gp.csv", sol.trace);
        const double r_prime = compute_r_prime(sol.weights.w, traj, psf.eta);
        weights = std::move(sol.weights);
        for (double& v : weights.w) v *= r_prime;
        weights.scale_applied = r_prime;
        break;
      }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

    write_weights_csv(dir / ("weights_" + name + ".csv"), weights);

    ComplexImage recon =
        grid_recon(samples, weights.w, width, height, cfg.gridding_alpha, grid_kernel);
    write_image(dir / ("recon_" + name + ".bin"), recon);
    RealImage mag = magnitude_image(recon);
    write_pgm16(dir / ("recon_" + name + ".pgm"), mag);

    RealImage errmap = db_error_map(recon, truth);
    write_image(dir / ("errmap_" + name + ".bin"), errmap);
    write_pgm16(dir / ("errmap_" + name + ".pgm"), errmap);

    MethodReport report;
    report.method = name;
    report.mse = mse(mag, truth);
    report.ssim = ssim(truth, mag);
    report.runtime_seconds = elapsed.count();
    result.reports.push_back(report);

    // Deterministic per-method report; wall clock goes to timings.csv only.
    std::ofstream rep(dir / ("report_" + name + ".csv"), std::ios::binary);
    if (!rep) throw IoError("cannot open report for writing");
    rep << "image,method,mse,ssim\n";
    rep << "phantom," << name << ',' << format_double(report.mse) << ','
        << format_double(report.ssim) << '\n';
    comparison.push_back({"phantom", name, report.mse, report.ssim, 0.0});
  }

  {
    std::ofstream cmp(dir / "comparison.csv", std::ios::binary);
    if (!cmp) throw IoError("cannot open comparison table for writing");
    cmp << "image,method,mse,ssim\n";
    for (const auto& row : comparison)
      cmp << row.image << ',' << row.method << ',' << format_double(row.mse) << ','
          << format_double(row.ssim) << '\n';
  }
  {
    std::ofstream tim(dir / "timings.csv", std::ios::binary);
    if (!tim) throw IoError("cannot open timings for writing");
    tim << "method,runtime_seconds\n";
    for (const auto& r : result.reports)
      tim << r.method << ',' << format_double(r.runtime_seconds) << '\n';
  }
  return result;
}

}  // namespace gridkit
