#include "compflex/pairing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace compflex {

PairedNetwork pair_base_stations(const VoronoiAdjacency& vor, RngStream& rng) {
  const int n = static_cast<int>(vor.sites.size());
  PairedNetwork net;
  net.partner.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return net;

  // Uniform visiting order (Fisher-Yates).
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)],
              order[rng.uniform_index(static_cast<std::uint64_t>(i) + 1)]);

  std::vector<int> open;  // scratch: unmatched neighbors of the visited BS
  for (int b : order) {
    if (net.partner[static_cast<std::size_t>(b)] != -1) continue;
    open.clear();
    for (int j : vor.neighbors[static_cast<std::size_t>(b)])
      if (net.partner[static_cast<std::size_t>(j)] == -1) open.push_back(j);
    if (open.empty()) continue;
    const int mate = open[rng.uniform_index(open.size())];
    net.partner[static_cast<std::size_t>(b)] = mate;
    net.partner[static_cast<std::size_t>(mate)] = b;
    net.pairs.emplace_back(std::min(b, mate), std::max(b, mate));
  }

  for (int b = 0; b < n; ++b)
    if (net.partner[static_cast<std::size_t>(b)] == -1) net.unpaired.push_back(b);
  std::sort(net.pairs.begin(), net.pairs.end());
  return net;
}

PairedNetwork assign_directions(PairedNetwork net, RngStream& rng) {
  if (net.directions_assigned())
    throw std::invalid_argument("assign_directions: directions already assigned");
  net.direction.assign(net.partner.size(), Direction::UL);
  for (const auto& [a, b] : net.pairs) {
    const bool a_ul = rng.uniform() < 0.5;
    net.direction[static_cast<std::size_t>(a)] = a_ul ? Direction::UL : Direction::DL;
    net.direction[static_cast<std::size_t>(b)] = a_ul ? Direction::DL : Direction::UL;
  }
  for (int b : net.unpaired)
    net.direction[static_cast<std::size_t>(b)] =
        rng.uniform() < 0.5 ? Direction::UL : Direction::DL;
  return net;
}

int typical_pair(const PairedNetwork& net, std::span<const Point2D> sites, Point2D center) {
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < net.pairs.size(); ++k) {
    const auto& [a, b] = net.pairs[k];
    const Point2D mid{0.5 * (sites[static_cast<std::size_t>(a)].x +
                             sites[static_cast<std::size_t>(b)].x),
                      0.5 * (sites[static_cast<std::size_t>(a)].y +
                             sites[static_cast<std::size_t>(b)].y)};
    const double d2 = squared_distance(mid, center);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = static_cast<int>(k);
    }
  }
  return best;
}

}  // namespace compflex
