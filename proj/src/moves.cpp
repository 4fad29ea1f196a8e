#include "trisurf/moves.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace trisurf {

namespace {

void require_edge(const Triangulation& t, Edge e) {
  const int n = t.vertex_count();
  if (e.a < 0 || e.b >= n || e.a == e.b || !t.adjacent(e.a, e.b)) {
    throw MoveError(MoveErrorKind::NotAnEdge, "not an edge: " + std::to_string(e.a) + " " + std::to_string(e.b));
  }
}

bool is_tetrahedron(const Triangulation& t) { return t.vertex_count() == 4; }

}  // namespace

int count_triangles_through_edge(const Triangulation& t, Edge e) {
  require_edge(t, e);
  return std::popcount(t.neighbor_mask(e.a) & t.neighbor_mask(e.b));
}

bool is_contractible(const Triangulation& t, Edge e) {
  const int k = count_triangles_through_edge(t, e);
  return k == 2 && !is_tetrahedron(t);
}

std::vector<Edge> contractible_edges(const Triangulation& t) {
  std::vector<Edge> out;
  if (is_tetrahedron(t)) return out;
  for (const Edge& e : t.edges())
    if (std::popcount(t.neighbor_mask(e.a) & t.neighbor_mask(e.b)) == 2) out.push_back(e);
  return out;
}

bool is_irreducible(const Triangulation& t) {
  if (is_tetrahedron(t)) return true;
  for (Vertex a = 0; a < t.vertex_count(); ++a) {
    for (Vertex b : t.neighbors(a)) {
      if (b > a && std::popcount(t.neighbor_mask(a) & t.neighbor_mask(b)) == 2) return false;
    }
  }
  return true;
}

Triangulation contract(const Triangulation& t, Edge e) {
  if (!is_contractible(t, e)) {
    throw MoveError(MoveErrorKind::NotContractible,
                    "edge " + std::to_string(e.a) + " " + std::to_string(e.b) + " is not contractible");
  }
  const Vertex keep = e.a, gone = e.b;
  auto map = [&](Vertex x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Face> faces;
  for (const Face& f : t.faces()) {
    if (f.contains(keep) && f.contains(gone)) continue;
    faces.emplace_back(map(f.v[0]), map(f.v[1]), map(f.v[2]));
  }
  return Triangulation::from_faces(t.vertex_count() - 1, std::move(faces));
}

Triangulation split(const Triangulation& t, Vertex v, Vertex b, Vertex d) {
  if (v < 0 || v >= t.vertex_count()) throw MoveError(MoveErrorKind::InvalidSplit, "vertex out of range");
  const std::vector<Vertex> link = link_cycle(t, v);
  const int k = static_cast<int>(link.size());
  const auto ib = std::find(link.begin(), link.end(), b) - link.begin();
  const auto id = std::find(link.begin(), link.end(), d) - link.begin();
  if (b == d || ib == k || id == k) {
    throw MoveError(MoveErrorKind::InvalidSplit, "b and d must be distinct neighbors of v");
  }

  // Link faces (v, link[i], link[i+1]) for i walking from ib to id stay on v.
  std::vector<bool> on_old_side(k, false);
  for (auto i = ib; i != id; i = (i + 1) % k) on_old_side[i] = true;

  const Vertex fresh = t.vertex_count();
  std::vector<Face> faces;
  for (const Face& f : t.faces()) {
    if (!f.contains(v)) faces.push_back(f);
  }
  for (int i = 0; i < k; ++i) {
    const Vertex p = link[i], q = link[(i + 1) % k];
    faces.emplace_back(on_old_side[i] ? v : fresh, p, q);
  }
  faces.emplace_back(v, fresh, b);
  faces.emplace_back(v, fresh, d);
  try {
    return Triangulation::from_faces(t.vertex_count() + 1, std::move(faces));
  } catch (const ValidationError& err) {
    throw MoveError(MoveErrorKind::InvalidSplit, std::string("split result invalid: ") + err.what());
  }
}

}  // namespace trisurf
