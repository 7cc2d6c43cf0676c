#pragma once

#include "compflex/pairing.hpp"
#include "compflex/quadrature.hpp"
#include "compflex/scenario.hpp"

namespace compflex {

// Densities and link budget for the closed-form success probabilities.
// Distances in km, densities per km^2, powers in W.
struct AnalyticParams {
  double lambda_c = 0.02;   // CoMPflex BS density
  double lambda_cu = 0.01;  // density of UL-tagged CoMPflex BSs
  double lambda_cd = 0.01;  // density of DL-tagged CoMPflex BSs
  double lambda_f = 0.01;   // FD BS density
  double alpha = 4.0;
  double mu = 1.0;
  double p_b_w = 10.0;
  double p_m_w = 0.1;
  double sigma2_w = 3.9810717055349695e-21;

  void validate() const;  // throws std::invalid_argument / std::domain_error
};

// Nearest-point distance law of a PPP: P[R <= r] = 1 - exp(-lambda pi r^2).
double distance_cdf(double r, double lambda);

// Laplace-functional kernel shared by every success formula:
//   K(c, r, L) = int_L^inf [ c (r/x)^alpha / (1 + c (r/x)^alpha) ] x dx
//              = int_L^inf x / (x^alpha / a + 1) dx,   a = c r^alpha.
// Needs alpha > 2 to converge. Evaluated by adaptive quadrature for any
// such alpha, or in closed form for alpha == 4:
//   K = (sqrt(a)/2) (pi/2 - atan(L^2 / sqrt(a))).
double interference_kernel_quadrature(double c, double r, double lower, double alpha,
                                      const QuadratureSpec& spec = {});
double interference_kernel_alpha4(double c, double r, double lower);

// Dispatcher: closed form when alpha == 4, quadrature otherwise.
double interference_kernel(double c, double r, double lower, double alpha,
                           const QuadratureSpec& spec = {});

// UL success probability with paired half-duplex BSs: the tagged UL BS hears
// its own MS at the nearest-BS distance, DL BSs interfere from beyond the
// pairing-partner exclusion (inner integral over the partner distance t), and
// other UL MSs interfere from beyond r.
double ul_success_compflex(const AnalyticParams& p, double beta_linear,
                           const QuadratureSpec& spec = {});

// DL success probability with paired half-duplex BSs. No cancellation is
// available at a DL mobile: DL BSs interfere from beyond r and UL MSs from
// anywhere, which makes this a lower bound.
double dl_success_compflex(const AnalyticParams& p, double beta_linear,
                           const QuadratureSpec& spec = {});

// UL success probability of the full-duplex baseline (density lambda_f,
// perfect self-interference cancellation).
double ul_success_fd(const AnalyticParams& p, double beta_linear,
                     const QuadratureSpec& spec = {});

// DL success probability of the full-duplex baseline, built as the structural
// analog of the CoMPflex DL bound with every transmitter at density lambda_f.
double dl_success_fd(const AnalyticParams& p, double beta_linear,
                     const QuadratureSpec& spec = {});

double success_probability(const AnalyticParams& p, Scheme scheme, Direction dir,
                           double beta_linear, const QuadratureSpec& spec = {});

}  // namespace compflex
