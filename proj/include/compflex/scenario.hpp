#pragma once

#include <vector>

#include "compflex/geometry.hpp"
#include "compflex/pairing.hpp"
#include "compflex/rng.hpp"

namespace compflex {

enum class Scheme { CoMPflex, FD };

struct MobileStation {
  Point2D pos;
  Direction dir = Direction::UL;
  int serving_bs = -1;
};

// Nodes of the link(s) whose pair/cell midpoint is closest to the window
// center; -1 where not applicable (e.g. no pair formed in the drop).
struct TypicalNodes {
  int ul_bs = -1;
  int dl_bs = -1;
  int ul_ms = -1;
  int dl_ms = -1;
};

// One fully built network drop: base stations, cells, roles and users.
//
// CoMPflex: each BS hosts exactly one MS, uniform in its cell; the MS link
// direction equals its BS role (UL BS serves one UL MS, DL BS serves one
// DL MS). Unpaired BSs still operate in their assigned direction.
//
// FD: every BS is full duplex and hosts two MSs, one UL and one DL.
struct Scenario {
  Scheme scheme = Scheme::CoMPflex;
  Deployment bs;
  VoronoiAdjacency cells;
  PairedNetwork pairing;              // pairs empty for FD
  std::vector<MobileStation> ms;
  std::vector<std::vector<int>> cell_ms;  // MS indices per cell
  TypicalNodes typical;

  bool bs_transmits_dl(int b) const {
    return scheme == Scheme::FD ||
           pairing.direction[static_cast<std::size_t>(b)] == Direction::DL;
  }
  int partner_of(int b) const {
    return pairing.partner.empty() ? -1 : pairing.partner[static_cast<std::size_t>(b)];
  }
};

// Sample a CoMPflex drop: PPP(lambda_c) of BSs, Voronoi adjacency, randomized
// greedy pairing, coin-flip directions, one MS per cell. Empty deployments
// are resampled from the same stream.
Scenario build_compflex_scenario(double lambda_c, const Window& window, RngStream& rng);

// Sample an FD drop: PPP(lambda_f) of BSs, one UL and one DL MS per cell.
Scenario build_fd_scenario(double lambda_f, const Window& window, RngStream& rng);

}  // namespace compflex
