#pragma once

#include <string>
#include <vector>

namespace gridkit {

enum class DcfMethod { gp, voronoi, fixed_point };

const char* to_string(DcfMethod m);
DcfMethod dcf_method_from_string(const std::string& name);

/// Per-sample density compensation values with provenance.  All entries are
/// nonnegative; scale_applied records the rescaling factor already folded
/// into w (1 when unscaled).
struct DensityWeights {
  std::vector<double> w;
  double scale_applied = 1.0;
  DcfMethod method = DcfMethod::gp;
  std::string params;  // free-form parameter summary
};

}  // namespace gridkit
