#include "compflex/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "compflex/analytic.hpp"

namespace compflex {

namespace {

// Substream roles per drop: scenario geometry, then one fading stream per
// link direction so UL and DL reuse the same network snapshot.
enum SubstreamRole : std::uint64_t {
  kScenario = 0,
  kFadingUl = 1,
  kFadingDl = 2,
  kTypicalDistance = 3,
};

Scenario build_drop(const McConfig& cfg, std::int64_t drop) {
  RngStream rng(cfg.seed, static_cast<std::uint64_t>(drop), kScenario);
  return cfg.scheme == Scheme::CoMPflex
             ? build_compflex_scenario(cfg.lambda, cfg.window, rng)
             : build_fd_scenario(cfg.lambda, cfg.window, rng);
}

int ul_ms_of_cell(const Scenario& sc, int cell) {
  for (int m : sc.cell_ms[static_cast<std::size_t>(cell)])
    if (sc.ms[static_cast<std::size_t>(m)].dir == Direction::UL) return m;
  return -1;
}

int dl_ms_of_cell(const Scenario& sc, int cell) {
  for (int m : sc.cell_ms[static_cast<std::size_t>(cell)])
    if (sc.ms[static_cast<std::size_t>(m)].dir == Direction::DL) return m;
  return -1;
}

}  // namespace

void McConfig::validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("mc: lambda must be > 0");
  if (!(window.side > 0.0)) throw std::invalid_argument("mc: window side must be > 0");
  if (!(guard_fraction >= 0.0 && guard_fraction < 1.0))
    throw std::invalid_argument("mc: guard_fraction must lie in [0, 1)");
  if (drops < 1) throw std::invalid_argument("mc: drops must be >= 1");
  if (thresholds_db.empty()) throw std::invalid_argument("mc: thresholds must be non-empty");
  for (double b : thresholds_db)
    if (!std::isfinite(b)) throw std::invalid_argument("mc: thresholds must be finite");
  if (!(channel.alpha > 0.0)) throw std::invalid_argument("mc: alpha must be > 0");
  if (!(channel.mu > 0.0)) throw std::invalid_argument("mc: mu must be > 0");
}

double EmpiricalCDF::value(double r) const {
  const auto it = std::upper_bound(samples.begin(), samples.end(), r);
  if (samples.empty()) return 0.0;
  return static_cast<double>(it - samples.begin()) / static_cast<double>(samples.size());
}

SuccessCurve estimate_success(const McConfig& cfg, Direction dir) {
  cfg.validate();

  std::vector<double> betas_db = cfg.thresholds_db;
  std::sort(betas_db.begin(), betas_db.end());
  std::vector<double> betas_lin(betas_db.size());
  for (std::size_t i = 0; i < betas_db.size(); ++i)
    betas_lin[i] = db_to_linear(betas_db[i]);

  const Window interior = cfg.window.shrunk(cfg.guard_fraction);
  const std::size_t nb = betas_db.size();
  std::vector<double> sum_p(nb, 0.0), sum_p2(nb, 0.0);
  std::vector<std::int64_t> hits(nb);
  std::int64_t used = 0, skipped = 0;

  std::vector<int> receivers;
  std::vector<double> sinrs;
  for (std::int64_t drop = 0; drop < cfg.drops; ++drop) {
    const Scenario sc = build_drop(cfg, drop);
    RngStream fade(cfg.seed, static_cast<std::uint64_t>(drop),
                   dir == Direction::UL ? kFadingUl : kFadingDl);

    receivers.clear();
    if (cfg.typical_only) {
      const int node = dir == Direction::UL ? sc.typical.ul_bs : sc.typical.dl_ms;
      if (node >= 0) receivers.push_back(node);
    } else if (dir == Direction::UL) {
      for (std::size_t b = 0; b < sc.bs.points.size(); ++b) {
        const bool ul_capable = sc.scheme == Scheme::FD ||
                                sc.pairing.direction[b] == Direction::UL;
        if (ul_capable && interior.contains(sc.bs.points[b]))
          receivers.push_back(static_cast<int>(b));
      }
    } else {
      for (std::size_t m = 0; m < sc.ms.size(); ++m)
        if (sc.ms[m].dir == Direction::DL && interior.contains(sc.ms[m].pos))
          receivers.push_back(static_cast<int>(m));
    }
    if (receivers.empty()) {
      ++skipped;
      continue;
    }

    sinrs.clear();
    for (int node : receivers)
      sinrs.push_back(dir == Direction::UL
                          ? uplink_sinr(sc, node, cfg.channel, fade).sinr
                          : downlink_sinr(sc, node, cfg.channel, fade).sinr);

    std::fill(hits.begin(), hits.end(), 0);
    for (double g : sinrs)
      for (std::size_t i = 0; i < nb; ++i)
        if (g >= betas_lin[i]) ++hits[i];
    const double inv = 1.0 / static_cast<double>(sinrs.size());
    for (std::size_t i = 0; i < nb; ++i) {
      const double m = static_cast<double>(hits[i]) * inv;
      sum_p[i] += m;
      sum_p2[i] += m * m;
    }
    ++used;
  }

  if (used == 0)
    throw std::runtime_error("estimate_success: every drop was skipped (no interior receivers)");

  SuccessCurve curve;
  curve.scheme = cfg.scheme;
  curve.direction = dir;
  curve.source = "mc";
  curve.drops_used = used;
  curve.drops_skipped = skipped;
  curve.seed = cfg.seed;
  curve.points.resize(nb);
  const double n = static_cast<double>(used);
  for (std::size_t i = 0; i < nb; ++i) {
    const double p = sum_p[i] / n;
    double half = 0.0;
    if (used > 1) {
      const double var = std::max(0.0, (sum_p2[i] - n * p * p) / (n - 1.0));
      half = 1.96 * std::sqrt(var / n);
    }
    curve.points[i] = {betas_db[i], p, std::max(0.0, p - half), std::min(1.0, p + half)};
  }
  return curve;
}

std::vector<EmpiricalCDF> estimate_distance_cdfs(const McConfig& cfg) {
  cfg.validate();
  const Window interior = cfg.window.shrunk(cfg.guard_fraction);

  std::vector<double> ul, dl, intra;
  for (std::int64_t drop = 0; drop < cfg.drops; ++drop) {
    const Scenario sc = build_drop(cfg, drop);
    for (std::size_t b = 0; b < sc.bs.points.size(); ++b) {
      if (!interior.contains(sc.bs.points[b])) continue;
      const int bi = static_cast<int>(b);
      if (sc.scheme == Scheme::FD) {
        const int u = ul_ms_of_cell(sc, bi);
        const int d = dl_ms_of_cell(sc, bi);
        ul.push_back(distance(sc.ms[static_cast<std::size_t>(u)].pos, sc.bs.points[b]));
        dl.push_back(distance(sc.bs.points[b], sc.ms[static_cast<std::size_t>(d)].pos));
        intra.push_back(distance(sc.ms[static_cast<std::size_t>(u)].pos,
                                 sc.ms[static_cast<std::size_t>(d)].pos));
      } else if (sc.pairing.direction[b] == Direction::UL) {
        const int u = ul_ms_of_cell(sc, bi);
        ul.push_back(distance(sc.ms[static_cast<std::size_t>(u)].pos, sc.bs.points[b]));
      } else {
        const int d = dl_ms_of_cell(sc, bi);
        dl.push_back(distance(sc.bs.points[b], sc.ms[static_cast<std::size_t>(d)].pos));
        // Pair-wise intra-cell interference distance, gated on the DL cell.
        const int partner = sc.partner_of(bi);
        if (partner >= 0) {
          const int u = ul_ms_of_cell(sc, partner);
          intra.push_back(distance(sc.ms[static_cast<std::size_t>(u)].pos,
                                   sc.ms[static_cast<std::size_t>(d)].pos));
        }
      }
    }
  }

  std::sort(ul.begin(), ul.end());
  std::sort(dl.begin(), dl.end());
  std::sort(intra.begin(), intra.end());
  std::vector<EmpiricalCDF> out(3);
  out[0] = {cfg.scheme, LinkType::UlSignal, std::move(ul)};
  out[1] = {cfg.scheme, LinkType::DlSignal, std::move(dl)};
  out[2] = {cfg.scheme, LinkType::IntraCellInterference, std::move(intra)};
  return out;
}

std::vector<double> sample_typical_link_distances(const McConfig& cfg) {
  cfg.validate();
  const double h = cfg.window.half();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cfg.drops));
  for (std::int64_t drop = 0; drop < cfg.drops; ++drop) {
    RngStream rng(cfg.seed, static_cast<std::uint64_t>(drop), kTypicalDistance);
    Deployment dep;
    do {
      dep = sample_ppp(cfg.lambda, cfg.window, rng);
    } while (dep.points.empty());
    const int b = nearest_site(dep.points, Point2D{0.0, 0.0});
    // Uniform point of the zero cell: uniform window candidates accepted when
    // the nearest site is the tagged one.
    while (true) {
      const Point2D q{rng.uniform(-h, h), rng.uniform(-h, h)};
      if (nearest_site(dep.points, q) == b) {
        out.push_back(distance(q, dep.points[static_cast<std::size_t>(b)]));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ks_vs_distance_cdf(std::span<const double> sorted_samples, double lambda) {
  const std::size_t n = sorted_samples.size();
  if (n == 0) throw std::invalid_argument("ks: empty sample");
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = distance_cdf(sorted_samples[i], lambda);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - f;
    const double lo = f - static_cast<double>(i) / static_cast<double>(n);
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks: empty sample");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double empirical_vs_analytic_distance(const McConfig& cfg) {
  const std::vector<double> samples = sample_typical_link_distances(cfg);
  return ks_vs_distance_cdf(samples, cfg.lambda);
}

}  // namespace compflex
