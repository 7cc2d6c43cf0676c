#pragma once

#include <cmath>
#include <queue>
#include <vector>

#include "compflex/error.hpp"

namespace compflex {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 256;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int subdivisions = 0;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 abscissae).
inline constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
inline constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
inline constexpr double kWg[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = hw * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    k += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) g += kWg[i / 2] * (f1 + f2);
  }
  return {a, b, k * hw, std::abs(k - g) * hw};
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a, b]: bisect whichever segment carries the
// largest error estimate until the summed estimate meets
// max(abs_tol, rel_tol * |value|). Throws QuadratureError when the budget of
// subdivisions runs out or the integrand goes non-finite.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 0};
    throw std::invalid_argument("integrate: requires a <= b");
  }
  std::priority_queue<detail::Segment> queue;
  detail::Segment whole = detail::gk15(f, a, b);
  double total_value = whole.value;
  double total_error = whole.error;
  queue.push(whole);
  int subdivisions = 0;
  while (true) {
    if (!std::isfinite(total_value) || !std::isfinite(total_error))
      throw QuadratureError("integrate: non-finite integrand", total_value,
                            total_error, subdivisions);
    if (total_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value)))
      return {total_value, total_error, subdivisions};
    if (subdivisions >= spec.max_subdivisions)
      throw QuadratureError("integrate: subdivision budget exhausted", total_value,
                            total_error, subdivisions);
    const detail::Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b))
      throw QuadratureError("integrate: interval collapsed below resolution",
                            total_value, total_error, subdivisions);
    const detail::Segment left = detail::gk15(f, worst.a, mid);
    const detail::Segment right = detail::gk15(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }
}

// Integral over [lower, inf) via the rational substitution
// x = lower + u/(1-u), dx = du/(1-u)^2, u in [0, 1). The integrand must
// decay fast enough that f(x)/(1-u)^2 -> 0 as u -> 1; everything integrated
// here dies off exponentially.
template <class F>
QuadratureResult integrate_to_infinity(F&& f, double lower, const QuadratureSpec& spec = {}) {
  auto mapped = [&f, lower](double u) -> double {
    const double den = 1.0 - u;
    if (den <= 1e-300) return 0.0;
    const double x = lower + u / den;
    if (!std::isfinite(x)) return 0.0;
    return f(x) / (den * den);
  };
  return integrate(mapped, 0.0, 1.0, spec);
}

}  // namespace compflex
