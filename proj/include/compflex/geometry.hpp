#pragma once

#include <span>
#include <vector>

#include "compflex/rng.hpp"

namespace compflex {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

double squared_distance(Point2D a, Point2D b);
double distance(Point2D a, Point2D b);

// Square observation window [-side/2, side/2]^2, in km.
struct Window {
  double side = 0.0;

  double half() const { return 0.5 * side; }
  double area() const { return side * side; }
  bool contains(Point2D p) const {
    const double h = half();
    return p.x >= -h && p.x <= h && p.y >= -h && p.y <= h;
  }
  // Central sub-window keeping a boundary margin of guard_fraction/2 * side
  // on each side (guard_fraction 0.2 keeps the central 80% x 80%).
  Window shrunk(double guard_fraction) const {
    return Window{side * (1.0 - guard_fraction)};
  }
};

// One realization of a planar PPP restricted to a window.
struct Deployment {
  std::vector<Point2D> points;
  double intensity = 0.0;  // per km^2
  Window window;
};

// Convex cell, vertices in counterclockwise order.
struct CellPolygon {
  std::vector<Point2D> vertices;

  double area() const;
  bool contains(Point2D p, double tol = 1e-12) const;
  void bounding_box(Point2D& lo, Point2D& hi) const;
};

// Window-clipped Voronoi cells plus the shared-edge adjacency graph.
// `sites` may differ from the input points by <= 1e-6 km where coincident
// inputs had to be jittered apart; everything downstream should use these.
struct VoronoiAdjacency {
  std::vector<Point2D> sites;
  Window window;
  std::vector<CellPolygon> cells;
  std::vector<std::vector<int>> neighbors;  // sorted, symmetric, irreflexive
};

// Homogeneous PPP with the given intensity (> 0, per km^2) on the window.
Deployment sample_ppp(double intensity, const Window& window, RngStream& rng);

// Voronoi cells of the deployment clipped to its window, with adjacency.
// Two cells are adjacent iff they share an edge longer than 1e-9 km.
// Throws std::domain_error if a degenerate (zero-area) cell shows up.
VoronoiAdjacency voronoi_adjacency(const Deployment& deployment);

// Uniform sample inside one cell, by rejection from its bounding box.
Point2D uniform_point_in_cell(const VoronoiAdjacency& vor, int cell, RngStream& rng);

// Index of the site closest to q (ties to the lowest index). -1 when empty.
int nearest_site(std::span<const Point2D> sites, Point2D q);

}  // namespace compflex
