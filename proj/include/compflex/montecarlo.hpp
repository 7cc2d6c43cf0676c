#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "compflex/channel.hpp"
#include "compflex/scenario.hpp"

namespace compflex {

struct McConfig {
  Scheme scheme = Scheme::CoMPflex;
  double lambda = 0.02;  // BS density of the simulated scheme, per km^2
  Window window{50.0};
  double guard_fraction = 0.2;  // stats come from the central (1-g)*s square
  std::vector<double> thresholds_db = {-20, -15, -10, -5, 0, 5, 10, 15, 20};
  std::int64_t drops = 2000;
  std::uint64_t seed = 1;
  ChannelParams channel;
  bool typical_only = false;  // evaluate only the typical link (validation mode)

  void validate() const;  // throws std::invalid_argument
};

struct SuccessPoint {
  double beta_db = 0.0;
  double p = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct SuccessCurve {
  Scheme scheme = Scheme::CoMPflex;
  Direction direction = Direction::UL;
  std::string source = "mc";
  std::vector<SuccessPoint> points;  // thresholds ascending
  std::int64_t drops_used = 0;
  std::int64_t drops_skipped = 0;
  std::uint64_t seed = 0;
};

enum class LinkType { UlSignal, DlSignal, IntraCellInterference };

struct EmpiricalCDF {
  Scheme scheme = Scheme::CoMPflex;
  LinkType link = LinkType::UlSignal;
  std::vector<double> samples;  // sorted ascending

  double value(double r) const;  // fraction of samples <= r
};

// Per drop: build the scheme's scenario with a (seed, drop) substream, draw
// fresh fadings, evaluate SINR at every eligible interior receiver of the
// requested direction (UL receivers are BSs, DL receivers are MSs), and score
// 1{SINR >= beta} against every threshold on the same SINR samples. p is the
// mean of per-drop means; the 95% CI is a normal approximation across drops.
SuccessCurve estimate_success(const McConfig& cfg, Direction dir);

// Per interior cell (BS inside the guard-trimmed window): the UL signal
// distance (UL MS -> its BS), the DL signal distance (BS -> DL MS), and the
// intra-cell interference distance (UL MS -> DL MS of the same FD cell, or
// the pair's UL MS -> pair's DL MS in CoMPflex, gated on the DL side's cell).
// Returns one CDF per link type, in enum order.
std::vector<EmpiricalCDF> estimate_distance_cdfs(const McConfig& cfg);

// Signal distance of the typical link, one sample per drop: BS nearest the
// origin, its MS uniform in the zero cell. This is the law Eq. 8 describes
// (the stationary distribution seen from the typical BS); per-cell pooling
// over a finite window carries an area bias of several percent instead.
std::vector<double> sample_typical_link_distances(const McConfig& cfg);

// One-sample KS distance between sorted samples and Eq. 8 at the given density.
double ks_vs_distance_cdf(std::span<const double> sorted_samples, double lambda);

// Two-sample KS distance between two sorted sample sets (tie-safe merge walk).
double ks_two_sample(std::span<const double> a_sorted, std::span<const double> b_sorted);

// KS of typical-link signal distances against Eq. 8 at cfg.lambda, with
// cfg.drops samples.
double empirical_vs_analytic_distance(const McConfig& cfg);

}  // namespace compflex
