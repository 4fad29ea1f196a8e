#include "trisurf/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trisurf {

namespace {

constexpr double kTol = 0.05;

bool same(Point a, Point b) { return std::abs(a.x - b.x) < kTol && std::abs(a.y - b.y) < kTol; }

int find_point(const std::vector<Point>& pts, Point p) {
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (same(pts[i], p)) return i;
  return -1;
}

}  // namespace

Triangulation build_from_drawing(const Drawing& d) {
  std::vector<Point> pts;
  for (Point p : d.points)
    if (find_point(pts, p) < 0) pts.push_back(p);
  const int np = static_cast<int>(pts.size());

  // Break each segment at every point lying on it.
  std::set<std::pair<int, int>> edges;
  for (const Segment& s : d.segments) {
    if (find_point(pts, s.from) < 0 || find_point(pts, s.to) < 0)
      throw std::invalid_argument("segment endpoint is not a drawn point");
    const double dx = s.to.x - s.from.x, dy = s.to.y - s.from.y;
    const double len = std::hypot(dx, dy);
    std::vector<std::pair<double, int>> on;
    for (int i = 0; i < np; ++i) {
      const double px = pts[i].x - s.from.x, py = pts[i].y - s.from.y;
      const double along = (px * dx + py * dy) / (len * len);
      const double off = std::abs(px * dy - py * dx) / len;
      if (off < kTol && along > -1e-9 && along < 1 + 1e-9) on.emplace_back(along, i);
    }
    std::sort(on.begin(), on.end());
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
      const int a = on[k].second, b = on[k + 1].second;
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }

  std::vector<std::vector<int>> around(np);
  for (auto [a, b] : edges) {
    around[a].push_back(b);
    around[b].push_back(a);
  }
  for (int a = 0; a < np; ++a) {
    std::sort(around[a].begin(), around[a].end(), [&](int p, int q) {
      return std::atan2(pts[p].y - pts[a].y, pts[p].x - pts[a].x) <
             std::atan2(pts[q].y - pts[a].y, pts[q].x - pts[a].x);
    });
  }

  // Gluing classes.
  std::vector<int> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [p, q] : d.glue) {
    const int a = find_point(pts, p), b = find_point(pts, q);
    if (a < 0 || b < 0) throw std::invalid_argument("glued point is not a drawn point");
    parent[root(a)] = root(b);
  }
  std::map<int, int> label;
  for (int i = 0; i < np; ++i) label.try_emplace(root(i), 0);
  int next = 0;
  for (auto& [r, l] : label) l = next++;

  // Trace regions with the region on the left of each directed edge.
  std::set<std::pair<int, int>> used;
  std::vector<Face> faces;
  for (auto [a0, b0] : edges) {
    for (auto [u, v] : {std::pair{a0, b0}, std::pair{b0, a0}}) {
      if (used.count({u, v})) continue;
      std::vector<int> cycle;
      int x = u, y = v;
      while (!used.count({x, y})) {
        used.insert({x, y});
        cycle.push_back(x);
        const auto& ring = around[y];
        const auto k = std::find(ring.begin(), ring.end(), x) - ring.begin();
        const int z = ring[(k + ring.size() - 1) % ring.size()];
        x = y;
        y = z;
      }
      double area = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point p = pts[cycle[i]], q = pts[cycle[(i + 1) % cycle.size()]];
        area += p.x * q.y - q.x * p.y;
      }
      if (area > 1e-9 && cycle.size() == 3) {
        faces.emplace_back(label[root(cycle[0])], label[root(cycle[1])], label[root(cycle[2])]);
      }
    }
  }
  return Triangulation::from_faces(next, std::move(faces));
}

std::vector<Point> lattice_points() {
  std::vector<Point> out;
  for (int y = 0; y <= 30; y += 10)
    for (int x = 0; x <= 30; x += 10) out.push_back({double(x), double(y)});
  return out;
}

std::vector<Segment> grid_lines(bool interior_verticals) {
  std::vector<Segment> out;
  for (int y = 0; y <= 30; y += 10) out.push_back({{0, double(y)}, {30, double(y)}});
  for (int x = 0; x <= 30; x += interior_verticals ? 10 : 30) out.push_back({{double(x), 0}, {double(x), 30}});
  return out;
}

Triangulation build_from_grid(const GridSpec& spec) {
  Drawing d;
  d.points = spec.points;
  for (Point c : {Point{0, 0}, Point{30, 0}, Point{0, 30}, Point{30, 30}}) d.points.push_back(c);
  d.segments = spec.segments;
  d.segments.push_back({{0, 0}, {30, 0}});
  d.segments.push_back({{0, 30}, {30, 30}});
  d.segments.push_back({{0, 0}, {0, 30}});
  d.segments.push_back({{30, 0}, {30, 30}});
  for (Point p : d.points) {
    if (std::abs(p.y - 30) < kTol) d.glue.push_back({p, {p.x, 0}});
    if (std::abs(p.x - 30) < kTol) d.glue.push_back({p, {0, 30 - p.y}});
  }
  return build_from_drawing(d);
}

}  // namespace trisurf
