#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "compflex/rng.hpp"
#include "compflex/scenario.hpp"

namespace compflex {

struct ChannelParams {
  double alpha = 4.0;   // pathloss exponent
  double mu = 1.0;      // Rayleigh power-fading rate, gains ~ Exp(mu)
  double noise_w = 3.9810717055349695e-21;  // -174 dBm total noise power, W
  double p_b_w = 10.0;  // BS transmit power, W (40 dBm)
  double p_m_w = 0.1;   // MS transmit power, W (20 dBm)
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double x);

// r^-alpha with r in km; r == 0 is a singularity and rejected.
inline double pathloss(double r_km, double alpha) {
  if (r_km <= 0.0) throw std::domain_error("pathloss: distance must be positive");
  return std::pow(r_km, -alpha);
}

inline double sample_fading(double mu, RngStream& rng) { return rng.exponential(mu); }

struct SinrBreakdown {
  double signal = 0.0;            // received signal power, W
  double interference_bs = 0.0;   // sum over the BS interferer set, W
  double interference_ms = 0.0;   // sum over the MS interferer set, W
  double noise = 0.0;             // W
  double sinr = 0.0;
  std::size_t n_bs_interferers = 0;
  std::size_t n_ms_interferers = 0;
};

// SINR at an UL base station. Gains come from `gain()` in a fixed order:
// serving link first, then BS interferers by ascending index, then MS
// interferers by ascending index, so injected gains land deterministically.
//
// Interferer sets: in CoMPflex the DL half of the tagged BS's own pair is
// perfectly cancelled over the backhaul, so psi = DL BSs minus the partner;
// in FD self-interference cancellation is ideal, so psi = all other BSs.
// phi = all UL MSs other than the served one, in both schemes.
template <class GainFn>
SinrBreakdown uplink_sinr_with(const Scenario& sc, int bs_index,
                               const ChannelParams& cp, GainFn&& gain) {
  const std::size_t b = static_cast<std::size_t>(bs_index);
  if (b >= sc.bs.points.size())
    throw std::invalid_argument("uplink_sinr: bs index out of range");
  if (sc.scheme == Scheme::CoMPflex &&
      sc.pairing.direction[b] != Direction::UL)
    throw std::invalid_argument("uplink_sinr: base station is not in UL mode");

  int served = -1;
  for (int m : sc.cell_ms[b])
    if (sc.ms[static_cast<std::size_t>(m)].dir == Direction::UL) {
      served = m;
      break;
    }
  if (served < 0) throw std::invalid_argument("uplink_sinr: cell has no UL user");

  const Point2D rx = sc.bs.points[b];
  SinrBreakdown out;
  out.noise = cp.noise_w;
  out.signal = gain() *
               pathloss(distance(sc.ms[static_cast<std::size_t>(served)].pos, rx), cp.alpha) *
               cp.p_m_w;

  const int partner = sc.partner_of(bs_index);
  for (std::size_t j = 0; j < sc.bs.points.size(); ++j) {
    if (j == b) continue;
    if (!sc.bs_transmits_dl(static_cast<int>(j))) continue;
    if (sc.scheme == Scheme::CoMPflex && static_cast<int>(j) == partner) continue;
    out.interference_bs +=
        gain() * pathloss(distance(sc.bs.points[j], rx), cp.alpha) * cp.p_b_w;
    ++out.n_bs_interferers;
  }
  for (std::size_t m = 0; m < sc.ms.size(); ++m) {
    if (static_cast<int>(m) == served) continue;
    if (sc.ms[m].dir != Direction::UL) continue;
    out.interference_ms += gain() * pathloss(distance(sc.ms[m].pos, rx), cp.alpha) * cp.p_m_w;
    ++out.n_ms_interferers;
  }
  out.sinr = out.signal / (out.noise + out.interference_bs + out.interference_ms);
  return out;
}

// SINR at a DL mobile station. Same gain ordering convention as uplink.
// Nothing is cancelled for a DL receiver: psi = every other DL-transmitting
// BS, phi = every UL MS (in FD that includes the one sharing its own cell).
template <class GainFn>
SinrBreakdown downlink_sinr_with(const Scenario& sc, int ms_index,
                                 const ChannelParams& cp, GainFn&& gain) {
  const std::size_t m = static_cast<std::size_t>(ms_index);
  if (m >= sc.ms.size())
    throw std::invalid_argument("downlink_sinr: ms index out of range");
  if (sc.ms[m].dir != Direction::DL)
    throw std::invalid_argument("downlink_sinr: mobile is not a DL user");

  const Point2D rx = sc.ms[m].pos;
  const std::size_t serving = static_cast<std::size_t>(sc.ms[m].serving_bs);
  SinrBreakdown out;
  out.noise = cp.noise_w;
  out.signal = gain() * pathloss(distance(sc.bs.points[serving], rx), cp.alpha) * cp.p_b_w;

  for (std::size_t j = 0; j < sc.bs.points.size(); ++j) {
    if (j == serving) continue;
    if (!sc.bs_transmits_dl(static_cast<int>(j))) continue;
    out.interference_bs +=
        gain() * pathloss(distance(sc.bs.points[j], rx), cp.alpha) * cp.p_b_w;
    ++out.n_bs_interferers;
  }
  for (std::size_t k = 0; k < sc.ms.size(); ++k) {
    if (sc.ms[k].dir != Direction::UL) continue;
    out.interference_ms += gain() * pathloss(distance(sc.ms[k].pos, rx), cp.alpha) * cp.p_m_w;
    ++out.n_ms_interferers;
  }
  out.sinr = out.signal / (out.noise + out.interference_bs + out.interference_ms);
  return out;
}

// Convenience wrappers drawing i.i.d. Exp(mu) gains from `rng`.
SinrBreakdown uplink_sinr(const Scenario& sc, int bs_index, const ChannelParams& cp,
                          RngStream& rng);
SinrBreakdown downlink_sinr(const Scenario& sc, int ms_index, const ChannelParams& cp,
                            RngStream& rng);

}  // namespace compflex
