#include "gridkit/psf_config.hpp"

#include <cmath>
#include <stdexcept>

namespace gridkit {

PsfConfig PsfConfig::for_image(int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("PsfConfig::for_image: size must be >= 1");
  PsfConfig cfg;
  cfg.half_fov = {width / 2.0, height / 2.0};
  cfg.gamma = {0.25 * width, 0.25 * height};
  cfg.eta = {1.0, 1.0};
  return cfg;
}

void PsfConfig::validate(int dim) const {
  if (static_cast<int>(half_fov.size()) != dim || static_cast<int>(gamma.size()) != dim ||
      static_cast<int>(eta.size()) != dim)
    throw std::invalid_argument("PsfConfig: per-axis arrays must all have length dim");
  for (int d = 0; d < dim; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (!(half_fov[i] > 0) || !std::isfinite(half_fov[i]))
      throw std::invalid_argument("PsfConfig: half_fov must be positive and finite");
    if (!(gamma[i] > 0) || !std::isfinite(gamma[i]))
      throw std::invalid_argument("PsfConfig: gamma must be positive and finite");
    if (!(eta[i] > 0) || eta[i] > half_fov[i])
      throw std::invalid_argument("PsfConfig: eta must satisfy 0 < eta <= half_fov");
  }
}

}  // namespace gridkit
