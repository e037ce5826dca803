#pragma once

namespace gridkit {

/// Bessel function of the first kind, order 1.  Ascending series below
/// |x| = 14, Hankel asymptotic expansion above; absolute error <= 1e-10
/// over the full real line.
double bessel_j1(double x);

/// Modified Bessel function of the first kind, order 0.  Ascending series
/// below |x| = 15, asymptotic expansion above; relative error <= 1e-12.
double bessel_i0(double x);

}  // namespace gridkit
