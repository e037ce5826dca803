#pragma once

#include <vector>

namespace gridkit {

/// Geometry of the point-spread-function shaping problem.  Per axis d:
/// half_fov[d] bounds the optimization domain [-half_fov[d], half_fov[d]]
/// (in pixels; half the image side, so the domain equals the image extent),
/// gamma[d] is the exponential weighting decay length, and eta[d] the width
/// of the small Dirac cell around the origin used for rescaling.
struct PsfConfig {
  std::vector<double> half_fov;
  std::vector<double> gamma;
  std::vector<double> eta;

  /// Defaults for a width x height image: half_fov = size/2, gamma = 25% of
  /// the side length per axis, eta = one pixel per axis.
  static PsfConfig for_image(int width, int height);

  int dim() const { return static_cast<int>(half_fov.size()); }

  /// Throws std::invalid_argument unless all three arrays have length dim
  /// with half_fov > 0, gamma > 0 and 0 < eta <= half_fov.
  void validate(int dim) const;
};

}  // namespace gridkit
