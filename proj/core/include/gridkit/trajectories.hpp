#pragma once

#include <cstddef>

#include "gridkit/sample_set.hpp"

namespace gridkit {

/// Radial sampling: n_spokes full diameters through the origin, spoke j at
/// angle pi*j/n_spokes, n_per_spoke points equispaced on [-k_max, k_max]
/// along each spoke.  Requires n_spokes >= 1, n_per_spoke >= 2 and
/// 0 < k_max <= 0.5.
SampleSet radial_trajectory(std::size_t n_spokes, std::size_t n_per_spoke, double k_max);

/// Uniform-density Archimedean spirals: interleave p at parameter t has
/// radius k_max*t and angle 2*pi*(n_revolutions*t + p/n_interleaves), with t
/// sampled at n_per_interleave equispaced values on [0, 1] (t = 0 alone when
/// n_per_interleave == 1).
SampleSet spiral_trajectory(std::size_t n_interleaves, std::size_t n_revolutions,
                            std::size_t n_per_interleave, double k_max);

/// Blades of parallel lines: for each angle index a, lines_per_angle lines
/// (perpendicular separation line_sep, centered on the origin) each carry
/// points_per_line points equispaced on [-0.5, 0.5] along the blade axis;
/// the blade is rotated by a*angle_step radians.  Points landing outside the
/// unit frequency box are discarded rather than clamped, so the output can
/// have fewer than n_angles*lines_per_angle*points_per_line samples.
SampleSet propeller_trajectory(std::size_t n_angles, double angle_step,
                               std::size_t lines_per_angle, double line_sep,
                               std::size_t points_per_line);

}  // namespace gridkit
