#pragma once

namespace gridkit {

/// Kaiser-Bessel interpolation kernel
///   C(u) = I0(beta * sqrt(1 - (2u/W)^2)) / W   for |u| <= W/2, else 0,
/// in grid units.  With the unit_integral flag the kernel is divided by its
/// continuous integral sinh(beta)/beta.
struct KernelSpec {
  double width = 5.0;
  double beta = 10.0;
  bool unit_integral = false;

  /// beta = pi * sqrt((W/alpha)^2 (alpha - 0.5)^2 - 0.8), the standard
  /// minimum-aliasing choice for an oversampling ratio alpha.
  static double beatty_beta(double width, double alpha);

  /// Kernel with the given width, Beatty beta for alpha, and normalization.
  static KernelSpec for_gridding(double width = 5.0, double alpha = 1.5,
                                 bool unit_integral = false);

  /// Continuous integral of the unnormalized kernel, sinh(beta)/beta
  /// (independent of W).
  double integral_unnormalized() const;

  void validate() const;
};

/// Kernel value at offset u grid units.
double kaiser_bessel(double u, const KernelSpec& spec);

}  // namespace gridkit
