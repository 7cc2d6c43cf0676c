#pragma once

#include <span>
#include <utility>
#include <vector>

#include "compflex/geometry.hpp"
#include "compflex/rng.hpp"

namespace compflex {

enum class Direction { UL, DL };

// Outcome of randomized greedy matching on the cell-adjacency graph, plus the
// UL/DL role assignment once made.
struct PairedNetwork {
  std::vector<std::pair<int, int>> pairs;  // (lower index, higher index)
  std::vector<int> unpaired;               // sorted
  std::vector<int> partner;                // partner[b], or -1 when unpaired
  std::vector<Direction> direction;        // per BS; empty until assigned

  bool directions_assigned() const { return !direction.empty(); }
};

// Randomized greedy maximal matching: visit base stations in a uniformly
// random order and pair each unmatched one with a uniformly random unmatched
// neighbor. The result is maximal: no two unpaired BSs remain adjacent.
PairedNetwork pair_base_stations(const VoronoiAdjacency& vor, RngStream& rng);

// Flip a fair coin per pair for which side is UL (the other becomes DL), and
// an independent coin per unpaired BS. Throws std::invalid_argument if
// directions were already assigned.
PairedNetwork assign_directions(PairedNetwork net, RngStream& rng);

// Index into net.pairs of the pair whose BS midpoint lies closest to `center`
// (ties to the lowest index); -1 when there are no pairs.
int typical_pair(const PairedNetwork& net, std::span<const Point2D> sites, Point2D center);

}  // namespace compflex
