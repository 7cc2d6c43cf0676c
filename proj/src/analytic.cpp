#include "compflex/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace compflex {

namespace {

constexpr double kPi = std::numbers::pi;
// exp underflows to 0 below roughly -745; skip nested work once the known
// exponent is already past it.
constexpr double kExpFloor = -745.0;

void check_beta(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("success: beta must be >= 0");
}

}  // namespace

void AnalyticParams::validate() const {
  if (!(lambda_c > 0.0)) throw std::invalid_argument("analytic: lambda_c must be > 0");
  if (!(lambda_cu >= 0.0) || !(lambda_cd >= 0.0))
    throw std::invalid_argument("analytic: tagged densities must be >= 0");
  if (!(lambda_f > 0.0)) throw std::invalid_argument("analytic: lambda_f must be > 0");
  if (!(alpha > 2.0)) throw std::domain_error("analytic: alpha must exceed 2");
  if (!(mu > 0.0)) throw std::invalid_argument("analytic: mu must be > 0");
  if (!(p_b_w > 0.0) || !(p_m_w > 0.0))
    throw std::invalid_argument("analytic: powers must be > 0");
  if (!(sigma2_w >= 0.0)) throw std::invalid_argument("analytic: sigma2 must be >= 0");
}

double distance_cdf(double r, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("distance_cdf: lambda must be > 0");
  if (r <= 0.0) return 0.0;
  return -std::expm1(-lambda * kPi * r * r);
}

double interference_kernel_quadrature(double c, double r, double lower, double alpha,
                                      const QuadratureSpec& spec) {
  if (c < 0.0 || r < 0.0 || lower < 0.0)
    throw std::invalid_argument("interference_kernel: arguments must be >= 0");
  if (!(alpha > 2.0)) throw std::domain_error("interference_kernel: alpha must exceed 2");
  if (c == 0.0 || r == 0.0) return 0.0;
  const double a = c * std::pow(r, alpha);
  // x/(x^alpha/a + 1): overflow in pow only drives the ratio to 0.
  auto integrand = [a, alpha](double x) {
    if (x <= 0.0) return 0.0;
    const double grow = std::pow(x, alpha) / a;
    if (std::isinf(grow)) return 0.0;
    return x / (grow + 1.0);
  };
  return integrate_to_infinity(integrand, lower, spec).value;
}

double interference_kernel_alpha4(double c, double r, double lower) {
  if (c < 0.0 || r < 0.0 || lower < 0.0)
    throw std::invalid_argument("interference_kernel: arguments must be >= 0");
  if (c == 0.0 || r == 0.0) return 0.0;
  const double sqrt_a = std::sqrt(c) * r * r;
  return 0.5 * sqrt_a * (kPi / 2.0 - std::atan(lower * lower / sqrt_a));
}

double interference_kernel(double c, double r, double lower, double alpha,
                           const QuadratureSpec& spec) {
  if (alpha == 4.0) return interference_kernel_alpha4(c, r, lower);
  return interference_kernel_quadrature(c, r, lower, alpha, spec);
}

double ul_success_compflex(const AnalyticParams& p, double beta, const QuadratureSpec& spec) {
  p.validate();
  check_beta(beta);
  const double c_bs = beta * p.p_b_w / p.p_m_w;  // DL BS interference at an UL BS

  auto outer = [&](double r) -> double {
    const double s = p.mu * beta * std::pow(r, p.alpha) / p.p_m_w;
    double known = -kPi * p.lambda_c * r * r - s * p.sigma2_w -
                   2.0 * kPi * p.lambda_cu * interference_kernel(beta, r, r, p.alpha, spec);
    if (known < kExpFloor) return 0.0;

    double l_psi = 1.0;
    if (p.lambda_cd > 0.0 && beta > 0.0) {
      // Average the DL-BS Laplace functional over the partner distance t;
      // the partner itself is cancelled, everything closer than t is not.
      auto inner = [&](double t) -> double {
        const double e = -kPi * p.lambda_cd * t * t -
                         2.0 * kPi * p.lambda_cd *
                             interference_kernel(c_bs, r, t, p.alpha, spec);
        if (e < kExpFloor) return 0.0;
        return 2.0 * kPi * p.lambda_cd * t * std::exp(e);
      };
      l_psi = integrate_to_infinity(inner, 0.0, spec).value;
    }
    return 2.0 * kPi * p.lambda_c * r * std::exp(known) * l_psi;
  };
  return integrate_to_infinity(outer, 0.0, spec).value;
}

double dl_success_compflex(const AnalyticParams& p, double beta, const QuadratureSpec& spec) {
  p.validate();
  check_beta(beta);
  const double c_ms = beta * p.p_m_w / p.p_b_w;  // UL MS interference at a DL MS

  auto outer = [&](double r) -> double {
    const double s = p.mu * beta * std::pow(r, p.alpha) / p.p_b_w;
    const double e = -kPi * p.lambda_c * r * r - s * p.sigma2_w -
                     2.0 * kPi * p.lambda_cd * interference_kernel(beta, r, r, p.alpha, spec) -
                     2.0 * kPi * p.lambda_cu *
                         interference_kernel(c_ms, r, 0.0, p.alpha, spec);
    if (e < kExpFloor) return 0.0;
    return 2.0 * kPi * p.lambda_c * r * std::exp(e);
  };
  return integrate_to_infinity(outer, 0.0, spec).value;
}

double ul_success_fd(const AnalyticParams& p, double beta, const QuadratureSpec& spec) {
  p.validate();
  check_beta(beta);
  const double c_bs = beta * p.p_b_w / p.p_m_w;

  auto outer = [&](double r) -> double {
    const double s = p.mu * beta * std::pow(r, p.alpha) / p.p_m_w;
    const double e = -kPi * p.lambda_f * r * r - s * p.sigma2_w -
                     2.0 * kPi * p.lambda_f * interference_kernel(c_bs, r, r, p.alpha, spec) -
                     2.0 * kPi * p.lambda_f * interference_kernel(beta, r, r, p.alpha, spec);
    if (e < kExpFloor) return 0.0;
    return 2.0 * kPi * p.lambda_f * r * std::exp(e);
  };
  return integrate_to_infinity(outer, 0.0, spec).value;
}

double dl_success_fd(const AnalyticParams& p, double beta, const QuadratureSpec& spec) {
  p.validate();
  check_beta(beta);
  const double c_ms = beta * p.p_m_w / p.p_b_w;

  auto outer = [&](double r) -> double {
    const double s = p.mu * beta * std::pow(r, p.alpha) / p.p_b_w;
    const double e = -kPi * p.lambda_f * r * r - s * p.sigma2_w -
                     2.0 * kPi * p.lambda_f * interference_kernel(beta, r, r, p.alpha, spec) -
                     2.0 * kPi * p.lambda_f *
                         interference_kernel(c_ms, r, 0.0, p.alpha, spec);
    if (e < kExpFloor) return 0.0;
    return 2.0 * kPi * p.lambda_f * r * std::exp(e);
  };
  return integrate_to_infinity(outer, 0.0, spec).value;
}

double success_probability(const AnalyticParams& p, Scheme scheme, Direction dir,
                           double beta, const QuadratureSpec& spec) {
  if (scheme == Scheme::CoMPflex)
    return dir == Direction::UL ? ul_success_compflex(p, beta, spec)
                                : dl_success_compflex(p, beta, spec);
  return dir == Direction::UL ? ul_success_fd(p, beta, spec)
                              : dl_success_fd(p, beta, spec);
}

}  // namespace compflex
