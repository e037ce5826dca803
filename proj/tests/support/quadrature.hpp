#pragma once

// Adaptive Gauss-Kronrod quadrature used as an independent oracle in tests.
// Global-adaptive strategy: the interval with the largest error estimate is
// bisected until the total estimate meets the tolerance.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace testsupport {

namespace detail {

// 15-point Kronrod nodes (positive half) and weights, 7-point Gauss weights.
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                                  0.417959183673469};

template <typename Scalar>
struct Interval {
  double a, b;
  Scalar integral;
  double error;
};

template <typename Scalar, typename F>
Interval<Scalar> gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Scalar kronrod{};
  Scalar gauss{};
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kXgk[i];
    const Scalar f1 = f(center - dx);
    const Scalar f2 = f(center + dx);
    const Scalar pair = (i == 7) ? f1 : f1 + f2;
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  const double diff = std::abs(kronrod - gauss);
  return {a, b, kronrod, diff};
}

}  // namespace detail

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 20000;
};

/// Adaptive integral of f over [a, b].  Scalar may be double or
/// std::complex<double>.
template <typename Scalar, typename F>
Scalar adaptive_quad(const F& f, double a, double b, const QuadOptions& opt = {}) {
  using detail::Interval;
  auto cmp = [](const Interval<Scalar>& x, const Interval<Scalar>& y) {
    return x.error < y.error;
  };
  std::priority_queue<Interval<Scalar>, std::vector<Interval<Scalar>>, decltype(cmp)> heap(cmp);
  heap.push(detail::gk15<Scalar>(f, a, b));
  Scalar total = heap.top().integral;
  double total_err = heap.top().error;

  int n = 1;
  while (n < opt.max_intervals) {
    const double goal = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (total_err <= goal) break;
    Interval<Scalar> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gk15<Scalar>(f, worst.a, mid);
    auto right = detail::gk15<Scalar>(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n;
  }
  return total;
}

/// Iterated 2-D integral over [ax,bx] x [ay,by]: adaptive in y of the
/// adaptive x-integral.  Inner tolerance is tightened by 10x.
template <typename Scalar, typename F>
Scalar adaptive_quad_2d(const F& f, double ax, double bx, double ay, double by,
                        const QuadOptions& opt = {}) {
  QuadOptions inner = opt;
  inner.rel_tol = std::max(opt.rel_tol * 0.1, 1e-14);
  auto outer = [&](double y) {
    return adaptive_quad<Scalar>([&](double x) { return f(x, y); }, ax, bx, inner);
  };
  return adaptive_quad<Scalar>(outer, ay, by, opt);
}

}  // namespace testsupport
