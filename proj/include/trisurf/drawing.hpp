#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trisurf/triangulation.hpp"

namespace trisurf {

struct Point {
  double x = 0;
  double y = 0;
};

struct Segment {
  Point from;
  Point to;
};

/// A straight-line planar drawing whose boundary points are glued in pairs.
/// Points lying on a segment split it; every bounded region with exactly
/// three corners becomes a face. Regions with more corners are dropped, so a
/// missing diagonal surfaces as a NonManifoldEdge rejection.
struct Drawing {
  std::vector<Point> points;
  std::vector<Segment> segments;
  std::vector<std::pair<Point, Point>> glue;
};

/// Handle-type figure on the 30x30 square with grid spacing 10. Horizontal
/// sides are glued in parallel, (x,0)~(x,30); vertical sides antiparallel,
/// (0,y)~(30,30-y). The frame and its corner points are implicit.
struct GridSpec {
  std::vector<Point> points;
  std::vector<Segment> segments;
};

Triangulation build_from_drawing(const Drawing& d);
Triangulation build_from_grid(const GridSpec& spec);

/// Points of the full 4x4 lattice, and the 12 frame segments plus the six
/// interior grid lines.
std::vector<Point> lattice_points();
std::vector<Segment> grid_lines(bool interior_verticals);

}  // namespace trisurf
