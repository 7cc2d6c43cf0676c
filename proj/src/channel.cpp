#include "compflex/channel.hpp"

namespace compflex {

double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

SinrBreakdown uplink_sinr(const Scenario& sc, int bs_index, const ChannelParams& cp,
                          RngStream& rng) {
  return uplink_sinr_with(sc, bs_index, cp, [&] { return sample_fading(cp.mu, rng); });
}

SinrBreakdown downlink_sinr(const Scenario& sc, int ms_index, const ChannelParams& cp,
                            RngStream& rng) {
  return downlink_sinr_with(sc, ms_index, cp, [&] { return sample_fading(cp.mu, rng); });
}

}  // namespace compflex
