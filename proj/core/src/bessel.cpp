#include "gridkit/bessel.hpp"

#include <cmath>
#include <numbers>

namespace gridkit {

namespace {

constexpr double kPi = std::numbers::pi;

// J1 ascending series: (x/2) * sum_k (-1)^k (x^2/4)^k / (k! (k+1)!).
// Extended-precision accumulation keeps the alternating-series cancellation
// below 1e-13 absolute at the |x| = 14 switch point.
double j1_series(double x) {
  const long double q = static_cast<long double>(x) * x / 4.0L;
  long double term = static_cast<long double>(x) / 2.0L;
  long double sum = term;
  for (int k = 1; k <= 60; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum) + 1e-300L) break;
  }
  return static_cast<double>(sum);
}

// Hankel expansion for order 1:
//   J1(x) = sqrt(2/(pi x)) [P cos(w) - Q sin(w)],  w = x - 3 pi/4,
// with P, Q built from c_k = c_{k-1} (4 - (2k-1)^2) / (8k).
double j1_asymptotic(double x) {
  const double w = x - 0.75 * kPi;
  long double c = 1.0L;
  long double p = 1.0L, q = 0.0L;
  long double xp = 1.0L;  // x^{-k}
  long double prev = 1e300L;
  for (int k = 1; k <= 30; ++k) {
    c *= (4.0L - (2.0L * k - 1) * (2.0L * k - 1)) / (8.0L * k);
    xp /= x;
    const long double term = c * xp;
    if (std::abs(term) >= prev) break;  // asymptotic tail started growing
    prev = std::abs(term);
    const int m = k / 2;
    const long double signed_term = (m % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    if (prev < 1e-20L) break;
  }
  return std::sqrt(2.0 / (kPi * x)) *
         (static_cast<double>(p) * std::cos(w) - static_cast<double>(q) * std::sin(w));
}

}  // namespace

double bessel_j1(double x) {
  const double ax = std::abs(x);
  double v = ax <= 14.0 ? j1_series(ax) : j1_asymptotic(ax);
  return x < 0 ? -v : v;  // odd function
}

double bessel_i0(double x) {
  const double ax = std::abs(x);
  if (ax <= 15.0) {
    // All-positive ascending series, no cancellation.
    const long double q = static_cast<long double>(ax) * ax / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 80; ++k) {
      term *= q / (static_cast<long double>(k) * k);
      sum += term;
      if (term < 1e-20L * sum) break;
    }
    return static_cast<double>(sum);
  }
  // I0(x) ~ e^x / sqrt(2 pi x) * sum_k b_k / x^k, b_k = b_{k-1} (2k-1)^2/(8k).
  long double b = 1.0L, sum = 1.0L, xp = 1.0L;
  long double prev = 1e300L;
  for (int k = 1; k <= 30; ++k) {
    b *= (2.0L * k - 1) * (2.0L * k - 1) / (8.0L * k);
    xp /= ax;
    const long double term = b * xp;
    if (term >= prev) break;
    prev = term;
    sum += term;
    if (term < 1e-18L * sum) break;
  }
  return std::exp(ax) / std::sqrt(2.0 * kPi * ax) * static_cast<double>(sum);
}

}  // namespace gridkit
