#include "compflex/scenario.hpp"

#include <stdexcept>

namespace compflex {

namespace {

Deployment sample_nonempty_ppp(double intensity, const Window& window, RngStream& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Deployment dep = sample_ppp(intensity, window, rng);
    if (!dep.points.empty()) return dep;
  }
  throw std::runtime_error("scenario: PPP stayed empty after 1000 resamples");
}

}  // namespace

Scenario build_compflex_scenario(double lambda_c, const Window& window, RngStream& rng) {
  Scenario sc;
  sc.scheme = Scheme::CoMPflex;
  sc.bs = sample_nonempty_ppp(lambda_c, window, rng);
  sc.cells = voronoi_adjacency(sc.bs);
  sc.bs.points = sc.cells.sites;  // canonical coordinates (jitter-safe)
  sc.pairing = assign_directions(pair_base_stations(sc.cells, rng), rng);

  const std::size_t n = sc.bs.points.size();
  sc.ms.reserve(n);
  sc.cell_ms.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    MobileStation m;
    m.pos = uniform_point_in_cell(sc.cells, static_cast<int>(i), rng);
    m.dir = sc.pairing.direction[i];
    m.serving_bs = static_cast<int>(i);
    sc.cell_ms[i].push_back(static_cast<int>(sc.ms.size()));
    sc.ms.push_back(m);
  }

  const int tp = typical_pair(sc.pairing, sc.bs.points, Point2D{0.0, 0.0});
  if (tp >= 0) {
    const auto& [a, b] = sc.pairing.pairs[static_cast<std::size_t>(tp)];
    const bool a_ul = sc.pairing.direction[static_cast<std::size_t>(a)] == Direction::UL;
    sc.typical.ul_bs = a_ul ? a : b;
    sc.typical.dl_bs = a_ul ? b : a;
    sc.typical.ul_ms = sc.cell_ms[static_cast<std::size_t>(sc.typical.ul_bs)].front();
    sc.typical.dl_ms = sc.cell_ms[static_cast<std::size_t>(sc.typical.dl_bs)].front();
  }
  return sc;
}

Scenario build_fd_scenario(double lambda_f, const Window& window, RngStream& rng) {
  Scenario sc;
  sc.scheme = Scheme::FD;
  sc.bs = sample_nonempty_ppp(lambda_f, window, rng);
  sc.cells = voronoi_adjacency(sc.bs);
  sc.bs.points = sc.cells.sites;
  const std::size_t n = sc.bs.points.size();
  sc.pairing.partner.assign(n, -1);

  sc.ms.reserve(2 * n);
  sc.cell_ms.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Direction d : {Direction::UL, Direction::DL}) {
      MobileStation m;
      m.pos = uniform_point_in_cell(sc.cells, static_cast<int>(i), rng);
      m.dir = d;
      m.serving_bs = static_cast<int>(i);
      sc.cell_ms[i].push_back(static_cast<int>(sc.ms.size()));
      sc.ms.push_back(m);
    }
  }

  const int b = nearest_site(sc.bs.points, Point2D{0.0, 0.0});
  if (b >= 0) {
    sc.typical.ul_bs = b;
    sc.typical.dl_bs = b;
    sc.typical.ul_ms = sc.cell_ms[static_cast<std::size_t>(b)][0];
    sc.typical.dl_ms = sc.cell_ms[static_cast<std::size_t>(b)][1];
  }
  return sc;
}

}  // namespace compflex
