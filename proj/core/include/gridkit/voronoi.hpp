#pragma once

#include "gridkit/density_weights.hpp"
#include "gridkit/sample_set.hpp"

namespace gridkit {

/// Density compensation from planar Voronoi cell areas.  Coincident samples
/// (max-norm tolerance 1e-12) share one cell, splitting its area equally;
/// every cell -- including unbounded hull cells -- is clipped to the unit
/// frequency box [-0.5, 0.5]^2, so the weights sum to the box area 1.
/// Requires at least 3 non-collinear distinct points; throws
/// DegenerateGeometryError otherwise.
DensityWeights voronoi_weights(const SampleSet& s);

}  // namespace gridkit
