#include "compflex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace compflex {

namespace {

constexpr double kCoincidenceTol = 1e-9;   // km; below this two sites are "equal"
constexpr double kJitterStep = 1e-6;       // km; deterministic separation nudge
constexpr double kMinSharedEdge = 1e-9;    // km; adjacency threshold
constexpr double kGoldenAngle = 2.399963229728653;

// Vertex list plus, per vertex k, the source of the edge leaving it:
// j >= 0 for the bisector with site j, -1..-4 for the window sides.
struct TaggedPolygon {
  std::vector<Point2D> v;
  std::vector<int> tag;
};

// Drop zero-length edges; the surviving vertex inherits the outgoing tag of
// the last vertex in the coincident run, which is the geometrically real edge.
void dedupe(TaggedPolygon& p) {
  TaggedPolygon out;
  const std::size_t n = p.v.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!out.v.empty() && squared_distance(out.v.back(), p.v[k]) < 1e-24) {
      out.tag.back() = p.tag[k];
    } else {
      out.v.push_back(p.v[k]);
      out.tag.push_back(p.tag[k]);
    }
  }
  while (out.v.size() > 1 && squared_distance(out.v.front(), out.v.back()) < 1e-24) {
    out.tag.front() = out.tag.back();  // wraparound duplicate: keep closing edge's tag
    out.v.pop_back();
    out.tag.pop_back();
  }
  p = std::move(out);
}

// Sutherland-Hodgman against the halfplane a*x + b*y <= c. New edges cut
// along the clip line are tagged with `source`.
void clip_halfplane(TaggedPolygon& p, double a, double b, double c, int source) {
  const std::size_t n = p.v.size();
  if (n == 0) return;
  TaggedPolygon out;
  out.v.reserve(n + 2);
  out.tag.reserve(n + 2);
  for (std::size_t k = 0; k < n; ++k) {
    const Point2D P = p.v[k];
    const Point2D Q = p.v[(k + 1) % n];
    const double sP = a * P.x + b * P.y - c;
    const double sQ = a * Q.x + b * Q.y - c;
    const bool p_in = sP <= 0.0;
    const bool q_in = sQ <= 0.0;
    if (p_in) {
      out.v.push_back(P);
      out.tag.push_back(p.tag[k]);  // next output point lies on edge k either way
      if (!q_in) {
        const double t = sP / (sP - sQ);
        out.v.push_back({P.x + t * (Q.x - P.x), P.y + t * (Q.y - P.y)});
        out.tag.push_back(source);  // runs along the clip line until re-entry
      }
    } else if (q_in) {
      const double t = sP / (sP - sQ);
      out.v.push_back({P.x + t * (Q.x - P.x), P.y + t * (Q.y - P.y)});
      out.tag.push_back(p.tag[k]);  // continues along edge k toward Q
    }
  }
  p = std::move(out);
  dedupe(p);
}

double max_vertex_d2(const TaggedPolygon& p, Point2D site) {
  double m = 0.0;
  for (const Point2D& q : p.v) m = std::max(m, squared_distance(site, q));
  return m;
}

struct BucketGrid {
  int dim = 1;
  double cell = 0.0;
  double half = 0.0;
  std::vector<std::vector<int>> buckets;

  BucketGrid(const Window& w, std::size_t n) {
    dim = std::max<int>(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(n) / 2.0))));
    half = w.half();
    cell = w.side / dim;
  }
  int clamp_idx(double coord) const {
    int i = static_cast<int>((coord + half) / cell);
    return std::clamp(i, 0, dim - 1);
  }
  void build(std::span<const Point2D> pts) {
    buckets.assign(static_cast<std::size_t>(dim) * dim, {});
    for (std::size_t i = 0; i < pts.size(); ++i)
      buckets[static_cast<std::size_t>(clamp_idx(pts[i].y)) * dim + clamp_idx(pts[i].x)]
          .push_back(static_cast<int>(i));
  }
  const std::vector<int>& at(int bx, int by) const {
    return buckets[static_cast<std::size_t>(by) * dim + bx];
  }
};

}  // namespace

double squared_distance(Point2D a, Point2D b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(Point2D a, Point2D b) { return std::sqrt(squared_distance(a, b)); }

double CellPolygon::area() const {
  double acc = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2D& p = vertices[k];
    const Point2D& q = vertices[(k + 1) % n];
    acc += p.x * q.y - q.x * p.y;
  }
  return 0.5 * acc;
}

bool CellPolygon::contains(Point2D p, double tol) const {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const Point2D& a = vertices[k];
    const Point2D& b = vertices[(k + 1) % n];
    const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross < -tol) return false;
  }
  return true;
}

void CellPolygon::bounding_box(Point2D& lo, Point2D& hi) const {
  lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  hi = {-lo.x, -lo.y};
  for (const Point2D& p : vertices) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
}

Deployment sample_ppp(double intensity, const Window& window, RngStream& rng) {
  if (intensity <= 0.0) throw std::invalid_argument("sample_ppp: intensity must be positive");
  if (window.side <= 0.0) throw std::invalid_argument("sample_ppp: window side must be positive");
  Deployment dep;
  dep.intensity = intensity;
  dep.window = window;
  const std::int64_t n = rng.poisson(intensity * window.area());
  dep.points.reserve(static_cast<std::size_t>(n));
  const double h = window.half();
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = rng.uniform(-h, h);
    const double y = rng.uniform(-h, h);
    dep.points.push_back({x, y});
  }
  return dep;
}

VoronoiAdjacency voronoi_adjacency(const Deployment& deployment) {
  VoronoiAdjacency vor;
  vor.window = deployment.window;
  vor.sites = deployment.points;
  const std::size_t n = vor.sites.size();
  vor.cells.resize(n);
  vor.neighbors.resize(n);
  if (n == 0) return vor;

  // Separate coincident sites deterministically; a tie in the nearest-site
  // relation would otherwise produce zero-area cells.
  for (std::size_t i = 1; i < n; ++i) {
    for (int attempt = 1; attempt <= 64; ++attempt) {
      bool clash = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (squared_distance(vor.sites[i], vor.sites[j]) <
            kCoincidenceTol * kCoincidenceTol) {
          clash = true;
          break;
        }
      }
      if (!clash) break;
      const double ang = kGoldenAngle * (static_cast<double>(i) + attempt);
      const double rad = kJitterStep * attempt;
      vor.sites[i].x = deployment.points[i].x + rad * std::cos(ang);
      vor.sites[i].y = deployment.points[i].y + rad * std::sin(ang);
    }
  }

  BucketGrid grid(vor.window, n);
  grid.build(vor.sites);

  const double h = vor.window.half();
  std::vector<std::pair<double, int>> ring;  // (d2, site)

  for (std::size_t i = 0; i < n; ++i) {
    const Point2D si = vor.sites[i];
    TaggedPolygon poly;
    poly.v = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
    poly.tag = {-1, -2, -3, -4};
    double maxd2 = max_vertex_d2(poly, si);

    const int bx = grid.clamp_idx(si.x);
    const int by = grid.clamp_idx(si.y);
    // Rings of buckets outward from the site's own bucket. A site j can only
    // cut the current cell if d(i,j) <= 2 * (max vertex distance), and ring R
    // holds no site nearer than (R-1)*bucket; both bounds only tighten as we
    // clip, so stopping is exact.
    for (int R = 0; R < 2 * grid.dim; ++R) {
      const double ring_min = (R - 1) * grid.cell;
      if (R > 0 && ring_min > 0.0 && ring_min * ring_min > 4.0 * maxd2) break;
      ring.clear();
      for (int dy = -R; dy <= R; ++dy) {
        const int y = by + dy;
        if (y < 0 || y >= grid.dim) continue;
        for (int dx = -R; dx <= R; ++dx) {
          if (std::max(std::abs(dx), std::abs(dy)) != R) continue;
          const int x = bx + dx;
          if (x < 0 || x >= grid.dim) continue;
          for (int j : grid.at(x, y)) {
            if (j == static_cast<int>(i)) continue;
            ring.emplace_back(squared_distance(si, vor.sites[j]), j);
          }
        }
      }
      std::sort(ring.begin(), ring.end());
      for (const auto& [d2, j] : ring) {
        if (d2 > 4.0 * maxd2) break;
        const Point2D sj = vor.sites[j];
        const double a = sj.x - si.x;
        const double b = sj.y - si.y;
        const double c = 0.5 * (a * (si.x + sj.x) + b * (si.y + sj.y));
        clip_halfplane(poly, a, b, c, j);
        maxd2 = max_vertex_d2(poly, si);
      }
    }

    if (poly.v.size() < 3)
      throw std::domain_error("voronoi_adjacency: degenerate cell");
    CellPolygon cell;
    cell.vertices = poly.v;
    if (cell.area() <= 0.0)
      throw std::domain_error("voronoi_adjacency: zero-area cell");
    vor.cells[i] = std::move(cell);

    // Shared-edge neighbors from the surviving bisector tags.
    std::vector<std::pair<int, double>> shared;
    for (std::size_t k = 0; k < poly.v.size(); ++k) {
      const int t = poly.tag[k];
      if (t < 0) continue;
      const double len = distance(poly.v[k], poly.v[(k + 1) % poly.v.size()]);
      bool merged = false;
      for (auto& [tj, l] : shared)
        if (tj == t) {
          l += len;
          merged = true;
          break;
        }
      if (!merged) shared.emplace_back(t, len);
    }
    for (const auto& [j, len] : shared)
      if (len > kMinSharedEdge) vor.neighbors[i].push_back(j);
  }

  // Symmetrize: borderline shared edges can survive rounding on one side only.
  for (std::size_t i = 0; i < n; ++i)
    for (int j : vor.neighbors[i]) {
      auto& nj = vor.neighbors[static_cast<std::size_t>(j)];
      if (std::find(nj.begin(), nj.end(), static_cast<int>(i)) == nj.end())
        nj.push_back(static_cast<int>(i));
    }
  for (auto& lst : vor.neighbors) std::sort(lst.begin(), lst.end());
  return vor;
}

Point2D uniform_point_in_cell(const VoronoiAdjacency& vor, int cell, RngStream& rng) {
  if (cell < 0 || static_cast<std::size_t>(cell) >= vor.cells.size())
    throw std::invalid_argument("uniform_point_in_cell: cell index out of range");
  const CellPolygon& poly = vor.cells[static_cast<std::size_t>(cell)];
  Point2D lo, hi;
  poly.bounding_box(lo, hi);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Point2D q{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
    if (poly.contains(q)) return q;
  }
  throw std::domain_error("uniform_point_in_cell: rejection sampling failed");
}

int nearest_site(std::span<const Point2D> sites, Point2D q) {
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double d2 = squared_distance(sites[i], q);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace compflex
