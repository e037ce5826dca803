#include "gridkit/kaiser_bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gridkit/bessel.hpp"

namespace gridkit {

double KernelSpec::beatty_beta(double width, double alpha) {
  const double q = width / alpha * (alpha - 0.5);
  return std::numbers::pi * std::sqrt(q * q - 0.8);
}

KernelSpec KernelSpec::for_gridding(double width, double alpha, bool unit_integral) {
  KernelSpec spec;
  spec.width = width;
  spec.beta = beatty_beta(width, alpha);
  spec.unit_integral = unit_integral;
  spec.validate();
  return spec;
}

double KernelSpec::integral_unnormalized() const {
  // Int_{-W/2}^{W/2} I0(beta sqrt(1-(2u/W)^2))/W du = sinh(beta)/beta.
  return std::sinh(beta) / beta;
}

void KernelSpec::validate() const {
  if (!(width > 0) || !std::isfinite(width))
    throw std::invalid_argument("KernelSpec: width must be > 0");
  if (!(beta > 0) || !std::isfinite(beta))
    throw std::invalid_argument("KernelSpec: beta must be > 0");
}

double kaiser_bessel(double u, const KernelSpec& spec) {
  spec.validate();
  const double half = 0.5 * spec.width;
  if (u < -half || u > half) return 0.0;
  const double q = 2.0 * u / spec.width;
  const double v = bessel_i0(spec.beta * std::sqrt(1.0 - q * q)) / spec.width;
  return spec.unit_integral ? v / spec.integral_unnormalized() : v;
}

}  // namespace gridkit
