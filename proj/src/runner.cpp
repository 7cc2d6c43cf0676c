#include "compflex/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "compflex/error.hpp"
#include "compflex/io.hpp"

namespace compflex {

namespace {

const char* to_string(RunMode m) {
  switch (m) {
    case RunMode::Mc: return "mc";
    case RunMode::Analytic: return "analytic";
    case RunMode::Both: return "both";
  }
  return "?";
}

const char* to_string(SchemeSelect s) {
  switch (s) {
    case SchemeSelect::CoMPflex: return "compflex";
    case SchemeSelect::FD: return "fd";
    case SchemeSelect::Both: return "both";
  }
  return "?";
}

const char* to_string(DirectionSelect d) {
  switch (d) {
    case DirectionSelect::UL: return "ul";
    case DirectionSelect::DL: return "dl";
    case DirectionSelect::Both: return "both";
  }
  return "?";
}

std::vector<Scheme> selected_schemes(SchemeSelect s) {
  switch (s) {
    case SchemeSelect::CoMPflex: return {Scheme::CoMPflex};
    case SchemeSelect::FD: return {Scheme::FD};
    case SchemeSelect::Both: return {Scheme::CoMPflex, Scheme::FD};
  }
  return {};
}

std::vector<Direction> selected_directions(DirectionSelect d) {
  switch (d) {
    case DirectionSelect::UL: return {Direction::UL};
    case DirectionSelect::DL: return {Direction::DL};
    case DirectionSelect::Both: return {Direction::UL, Direction::DL};
  }
  return {};
}

// Radius covering CDF mass up to 0.999 under Eq. 8, for analytic marker rows.
double analytic_r_max(double lambda) {
  return std::sqrt(std::log(1000.0) / (std::numbers::pi * lambda));
}

void append_cdf_grid(std::vector<DistanceCdfRow>& rows, const EmpiricalCDF& cdf,
                     int grid_points) {
  if (cdf.samples.empty()) return;
  const double r_max = cdf.samples.back();
  for (int j = 0; j < grid_points; ++j) {
    const double r = r_max * static_cast<double>(j) / (grid_points - 1);
    rows.push_back({cdf.scheme, to_string(cdf.link), r, cdf.value(r)});
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!(window_km > 0.0)) throw ConfigError("window_km", "must be > 0");
  if (!(lambda_c > 0.0)) throw ConfigError("lambda_c", "must be > 0");
  if (!(lambda_f > 0.0)) throw ConfigError("lambda_f", "must be > 0");
  if (!(alpha > 2.0)) throw ConfigError("alpha", "must exceed 2 for convergence");
  if (!(mu > 0.0)) throw ConfigError("mu", "must be > 0");
  if (!std::isfinite(sigma2_dbm)) throw ConfigError("sigma2_dbm", "must be finite");
  if (!std::isfinite(p_b_dbm) || !std::isfinite(p_m_dbm))
    throw ConfigError("p_b_dbm", "powers must be finite dBm values");
  if (beta_db.empty()) throw ConfigError("beta_db", "threshold grid must be non-empty");
  for (double b : beta_db)
    if (!std::isfinite(b)) throw ConfigError("beta_db", "thresholds must be finite");
  if (drops < 1) throw ConfigError("drops", "must be >= 1");
  if (!(guard_fraction >= 0.0 && guard_fraction < 1.0))
    throw ConfigError("guard_fraction", "must lie in [0, 1)");
  if (out_dir.empty()) throw ConfigError("out", "output directory must be non-empty");
  // Comparing schemes only makes sense under the paper's density coupling.
  if (schemes == SchemeSelect::Both && lambda_f_explicit) {
    const double want = 0.5 * lambda_c;
    if (std::abs(lambda_f - want) > 1e-12 * std::max(1.0, want))
      throw ConfigError("lambda_f",
                        "must equal lambda_c/2 when both schemes are requested");
  }
}

ChannelParams RunConfig::to_channel_params() const {
  ChannelParams cp;
  cp.alpha = alpha;
  cp.mu = mu;
  cp.noise_w = dbm_to_watts(sigma2_dbm);
  cp.p_b_w = dbm_to_watts(p_b_dbm);
  cp.p_m_w = dbm_to_watts(p_m_dbm);
  return cp;
}

AnalyticParams RunConfig::to_analytic_params() const {
  AnalyticParams ap;
  ap.lambda_c = lambda_c;
  ap.lambda_cu = 0.5 * lambda_c;
  ap.lambda_cd = 0.5 * lambda_c;
  ap.lambda_f = lambda_f;
  ap.alpha = alpha;
  ap.mu = mu;
  ap.p_b_w = dbm_to_watts(p_b_dbm);
  ap.p_m_w = dbm_to_watts(p_m_dbm);
  ap.sigma2_w = dbm_to_watts(sigma2_dbm);
  return ap;
}

McConfig RunConfig::to_mc_config(Scheme scheme) const {
  McConfig mc;
  mc.scheme = scheme;
  mc.lambda = scheme == Scheme::CoMPflex ? lambda_c : lambda_f;
  mc.window = Window{window_km};
  mc.guard_fraction = guard_fraction;
  mc.thresholds_db = beta_db;
  mc.drops = drops;
  mc.seed = seed;
  mc.channel = to_channel_params();
  mc.typical_only = typical_only;
  return mc;
}

std::string beta_grid_to_string(const std::vector<double>& beta_db) {
  std::string out;
  for (std::size_t i = 0; i < beta_db.size(); ++i) {
    if (i) out += ',';
    out += format_g9(beta_db[i]);
  }
  return out;
}

std::vector<double> parse_beta_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      const double v = std::stod(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("beta_db", "cannot parse threshold '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("beta_db", "threshold grid must be non-empty");
  return out;
}

void write_manifest(std::ostream& os, const RunConfig& c, const RunReport& report) {
  os << "# compflex-sim run manifest; reusable as --config input\n";
  os << "window_km=" << format_g9(c.window_km) << '\n';
  os << "lambda_c=" << format_g9(c.lambda_c) << '\n';
  os << "lambda_f=" << format_g9(c.lambda_f) << '\n';
  os << "sigma2_dbm=" << format_g9(c.sigma2_dbm) << '\n';
  os << "alpha=" << format_g9(c.alpha) << '\n';
  os << "mu=" << format_g9(c.mu) << '\n';
  os << "p_b_dbm=" << format_g9(c.p_b_dbm) << '\n';
  os << "p_m_dbm=" << format_g9(c.p_m_dbm) << '\n';
  os << "beta_db=\"" << beta_grid_to_string(c.beta_db) << "\"\n";
  os << "drops=" << c.drops << '\n';
  os << "seed=" << c.seed << '\n';
  os << "guard_fraction=" << format_g9(c.guard_fraction) << '\n';
  os << "mode=" << to_string(c.mode) << '\n';
  os << "scheme=" << to_string(c.schemes) << '\n';
  os << "direction=" << to_string(c.directions) << '\n';
  os << "success_curves=" << (c.success_curves ? "true" : "false") << '\n';
  os << "distance_cdfs=" << (c.distance_cdfs ? "true" : "false") << '\n';
  os << "typical_only=" << (c.typical_only ? "true" : "false") << '\n';
  os << "dump_scenario=" << (c.dump_scenario ? "true" : "false") << '\n';
  os << "out=" << c.out_dir << '\n';
  for (const std::string& note : report.notes) os << "# " << note << '\n';
}

RunReport run(const RunConfig& config) {
  config.validate();
  RunReport report;

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw ConfigError("out", "cannot create output directory: " + ec.message());

  const std::vector<Scheme> schemes = selected_schemes(config.schemes);
  const std::vector<Direction> directions = selected_directions(config.directions);
  const bool want_mc = config.mode != RunMode::Analytic;
  const bool want_analytic = config.mode != RunMode::Mc;

  auto open_out = [&](const std::string& name) {
    const std::string path = (fs::path(config.out_dir) / name).string();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("out", "cannot open " + path + " for writing");
    report.files_written.push_back(path);
    return os;
  };

  if (config.success_curves) {
    std::vector<SuccessCurve> curves;
    for (Scheme scheme : schemes) {
      for (Direction dir : directions) {
        if (want_mc) {
          SuccessCurve mc = estimate_success(config.to_mc_config(scheme), dir);
          report.drops_skipped_total += mc.drops_skipped;
          std::ostringstream note;
          note << "skipped_drops " << compflex::to_string(scheme) << ' '
               << compflex::to_string(dir) << ' ' << mc.drops_skipped;
          report.notes.push_back(note.str());
          curves.push_back(std::move(mc));
        }
        if (want_analytic) {
          const AnalyticParams ap = config.to_analytic_params();
          SuccessCurve an;
          an.scheme = scheme;
          an.direction = dir;
          an.source = scheme == Scheme::FD && dir == Direction::DL ? "analytic_analog"
                                                                   : "analytic";
          std::vector<double> grid = config.beta_db;
          std::sort(grid.begin(), grid.end());
          for (double beta_db : grid) {
            const double p = success_probability(ap, scheme, dir, db_to_linear(beta_db));
            an.points.push_back({beta_db, p, p, p});
          }
          curves.push_back(std::move(an));
        }
      }
    }
    auto os = open_out("success_curve.csv");
    write_success_csv(os, curves);
  }

  if (config.distance_cdfs) {
    constexpr int kGrid = 256;
    std::vector<DistanceCdfRow> rows;
    for (Scheme scheme : schemes) {
      if (want_mc) {
        const std::vector<EmpiricalCDF> cdfs =
            estimate_distance_cdfs(config.to_mc_config(scheme));
        for (const EmpiricalCDF& cdf : cdfs) append_cdf_grid(rows, cdf, kGrid);
      }
      if (want_analytic) {
        const double lambda = scheme == Scheme::CoMPflex ? config.lambda_c : config.lambda_f;
        const double r_max = analytic_r_max(lambda);
        for (int j = 0; j < kGrid; ++j) {
          const double r = r_max * static_cast<double>(j) / (kGrid - 1);
          rows.push_back({scheme, "signal_analytic", r, distance_cdf(r, lambda)});
        }
      }
    }
    auto os = open_out("distance_cdf.csv");
    write_distance_csv(os, rows);
  }

  if (config.dump_scenario) {
    for (Scheme scheme : schemes) {
      RngStream rng(config.seed, 0, 0);
      const Scenario sc = scheme == Scheme::CoMPflex
                              ? build_compflex_scenario(config.lambda_c,
                                                        Window{config.window_km}, rng)
                              : build_fd_scenario(config.lambda_f,
                                                  Window{config.window_km}, rng);
      auto os = open_out(std::string("scenario_") + compflex::to_string(scheme) + ".csv");
      write_scenario_csv(os, sc);
      if (scheme == Scheme::CoMPflex) {
        auto osp = open_out("pairing_compflex.csv");
        write_pairing_csv(osp, sc.pairing);
      }
    }
  }

  auto os = open_out("run_manifest");
  write_manifest(os, config, report);
  return report;
}

}  // namespace compflex
