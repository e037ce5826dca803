#include "gridkit/density_weights.hpp"

#include <stdexcept>

namespace gridkit {

const char* to_string(DcfMethod m) {
  switch (m) {
    case DcfMethod::gp:
      return "gp";
    case DcfMethod::voronoi:
      return "voronoi";
    case DcfMethod::fixed_point:
      return "fixed_point";
  }
  return "unknown";
}

DcfMethod dcf_method_from_string(const std::string& name) {
  if (name == "gp") return DcfMethod::gp;
  if (name == "voronoi") return DcfMethod::voronoi;
  if (name == "fixed_point" || name == "fp") return DcfMethod::fixed_point;
  throw std::invalid_argument("unknown density compensation method: " + name);
}

}  // namespace gridkit
