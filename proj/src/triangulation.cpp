#include "trisurf/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

namespace trisurf {

Face::Face(Vertex a, Vertex b, Vertex c) : v{a, b, c} { std::sort(v.begin(), v.end()); }

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::TooFewVertices: return "TooFewVertices";
    case Violation::TooManyVertices: return "TooManyVertices";
    case Violation::LabelOutOfRange: return "LabelOutOfRange";
    case Violation::DegenerateFace: return "DegenerateFace";
    case Violation::DuplicateFace: return "DuplicateFace";
    case Violation::UnusedLabel: return "UnusedLabel";
    case Violation::NonManifoldEdge: return "NonManifoldEdge";
    case Violation::DisconnectedLink: return "DisconnectedLink";
    case Violation::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

namespace {

std::string describe(const Rejection& r) {
  std::string s(to_string(r.kind));
  if (!r.detail.empty()) s += ": " + r.detail;
  return s;
}

std::string face_str(const Face& f) {
  std::ostringstream os;
  os << f.v[0] << ' ' << f.v[1] << ' ' << f.v[2];
  return os.str();
}

}  // namespace

ValidationError::ValidationError(Rejection r) : std::runtime_error(describe(r)), rejection_(std::move(r)) {}

std::optional<Rejection> check_faces(int n, std::span<const Face> input) {
  if (n < 4) return Rejection{Violation::TooFewVertices, "n=" + std::to_string(n)};
  if (n > Triangulation::kMaxVertices) return Rejection{Violation::TooManyVertices, "n=" + std::to_string(n)};

  for (const Face& f : input) {
    for (Vertex x : f.v)
      if (x < 0 || x >= n) return Rejection{Violation::LabelOutOfRange, "face " + face_str(f)};
    if (f.v[0] == f.v[1] || f.v[1] == f.v[2]) return Rejection{Violation::DegenerateFace, "face " + face_str(f)};
  }

  std::vector<Face> faces(input.begin(), input.end());
  std::sort(faces.begin(), faces.end());
  if (auto it = std::adjacent_find(faces.begin(), faces.end()); it != faces.end())
    return Rejection{Violation::DuplicateFace, "face " + face_str(*it)};

  std::vector<bool> used(n, false);
  for (const Face& f : faces)
    for (Vertex x : f.v) used[x] = true;
  for (int v = 0; v < n; ++v)
    if (!used[v]) return Rejection{Violation::UnusedLabel, "vertex " + std::to_string(v)};

  // Third vertices per edge; more than two means a non-manifold edge.
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> opposite;
  for (const Face& f : faces) {
    auto [a, b, c] = f.v;
    opposite[{a, b}].push_back(c);
    opposite[{a, c}].push_back(b);
    opposite[{b, c}].push_back(a);
  }
  for (const auto& [e, thirds] : opposite) {
    if (thirds.size() != 2) {
      return Rejection{Violation::NonManifoldEdge, "edge " + std::to_string(e.first) + " " +
                                                       std::to_string(e.second) + " lies in " +
                                                       std::to_string(thirds.size()) + " faces"};
    }
  }

  // Each link is 2-regular by now; it must also be a single cycle.
  for (int v = 0; v < n; ++v) {
    std::map<Vertex, std::vector<Vertex>> link;
    for (const Face& f : faces) {
      if (!f.contains(v)) continue;
      Vertex p = -1, q = -1;
      for (Vertex x : f.v) {
        if (x == v) continue;
        (p < 0 ? p : q) = x;
      }
      link[p].push_back(q);
      link[q].push_back(p);
    }
    const Vertex start = link.begin()->first;
    Vertex prev = -1, cur = start;
    std::size_t steps = 0;
    do {
      const auto& nb = link[cur];
      Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != start && steps <= link.size());
    if (steps != link.size()) {
      return Rejection{Violation::DisconnectedLink, "vertex " + std::to_string(v) + " has a link that is not one cycle"};
    }
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Face& f : faces) {
    parent[find(f.v[1])] = find(f.v[0]);
    parent[find(f.v[2])] = find(f.v[0]);
  }
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) return Rejection{Violation::Disconnected, "vertex " + std::to_string(v)};

  return std::nullopt;
}

Triangulation::Triangulation(int n, std::vector<Face> faces) : n_(n), faces_(std::move(faces)), adj_(n, 0) {
  for (const Face& f : faces_) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) adj_[f.v[i]] |= std::uint64_t{1} << f.v[j];
  }
}

Triangulation Triangulation::from_faces(int n, std::vector<Face> faces) {
  if (auto r = check_faces(n, faces)) throw ValidationError(std::move(*r));
  std::sort(faces.begin(), faces.end());
  return Triangulation(n, std::move(faces));
}

int Triangulation::degree(Vertex v) const { return std::popcount(adj_[v]); }

std::vector<Vertex> Triangulation::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b : neighbors(a))
      if (a < b) out.emplace_back(a, b);
  return out;
}

std::array<Vertex, 2> Triangulation::opposite(Edge e) const {
  std::array<Vertex, 2> out{-1, -1};
  int k = 0;
  for (const Face& f : faces_) {
    if (!f.contains(e.a) || !f.contains(e.b)) continue;
    for (Vertex x : f.v)
      if (x != e.a && x != e.b) out[k++] = x;
  }
  if (k != 2) throw std::invalid_argument("not an edge: " + std::to_string(e.a) + " " + std::to_string(e.b));
  return out;
}

std::string SurfaceId::name() const {
  if (orientable && euler_characteristic == 2) return "sphere";
  if (!orientable && euler_characteristic == 1) return "projective plane";
  if (orientable && euler_characteristic == 0) return "torus";
  if (!orientable && euler_characteristic == 0) return "Klein bottle";
  if (orientable) return "orientable genus " + std::to_string((2 - euler_characteristic) / 2);
  return "non-orientable genus " + std::to_string(2 - euler_characteristic);
}

SurfaceId surface_of(const Triangulation& t) {
  const auto faces = t.faces();
  const int n = t.vertex_count();
  const int chi = n - t.edge_count() + t.face_count();

  // Faces around each directed edge, to walk across shared edges.
  std::map<std::pair<Vertex, Vertex>, std::vector<int>> by_edge;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    auto [a, b, c] = faces[i].v;
    by_edge[{a, b}].push_back(i);
    by_edge[{a, c}].push_back(i);
    by_edge[{b, c}].push_back(i);
  }

  // orient[i] is the cyclic order chosen for face i; a consistent choice
  // traverses every shared edge in opposite directions on its two sides.
  std::vector<std::array<Vertex, 3>> orient(faces.size());
  std::vector<bool> seen(faces.size(), false);
  bool orientable = true;
  std::queue<int> q;
  orient[0] = faces[0].v;
  seen[0] = true;
  q.push(0);
  auto has_directed = [](const std::array<Vertex, 3>& o, Vertex x, Vertex y) {
    for (int k = 0; k < 3; ++k)
      if (o[k] == x && o[(k + 1) % 3] == y) return true;
    return false;
  };
  while (!q.empty()) {
    const int i = q.front();
    q.pop();
    for (int k = 0; k < 3; ++k) {
      const Vertex x = orient[i][k], y = orient[i][(k + 1) % 3];
      for (int j : by_edge[{std::min(x, y), std::max(x, y)}]) {
        if (j == i) continue;
        if (!seen[j]) {
          // Neighbor must run y -> x.
          const Vertex z = faces[j].v[0] + faces[j].v[1] + faces[j].v[2] - x - y;
          orient[j] = {y, x, z};
          seen[j] = true;
          q.push(j);
        } else if (!has_directed(orient[j], y, x)) {
          orientable = false;
        }
      }
    }
  }
  return {orientable, chi};
}

std::string DegreeSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(degrees[i]);
  }
  return s + ")";
}

DegreeSequence degree_sequence(const Triangulation& t) {
  DegreeSequence d;
  for (int v = 0; v < t.vertex_count(); ++v) d.degrees.push_back(t.degree(v));
  std::sort(d.degrees.begin(), d.degrees.end(), std::greater<>());
  return d;
}

std::vector<Vertex> link_cycle(const Triangulation& t, Vertex v) {
  if (v < 0 || v >= t.vertex_count()) throw std::out_of_range("vertex out of range");
  std::map<Vertex, std::array<Vertex, 2>> link;
  for (const Face& f : t.faces()) {
    if (!f.contains(v)) continue;
    Vertex p = -1, q = -1;
    for (Vertex x : f.v) {
      if (x == v) continue;
      (p < 0 ? p : q) = x;
    }
    auto add = [&](Vertex from, Vertex to) {
      auto [it, fresh] = link.try_emplace(from, std::array<Vertex, 2>{to, -1});
      if (!fresh) it->second[1] = to;
    };
    add(p, q);
    add(q, p);
  }
  // Start at the smallest neighbor, heading toward its smaller cycle neighbor.
  const Vertex start = link.begin()->first;
  const auto& nb = link[start];
  std::vector<Vertex> cycle{start};
  Vertex prev = start, cur = std::min(nb[0], nb[1]);
  while (cur != start) {
    cycle.push_back(cur);
    const auto& cn = link[cur];
    const Vertex next = cn[0] != prev ? cn[0] : cn[1];
    prev = cur;
    cur = next;
  }
  return cycle;
}

Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm) {
  std::vector<Face> faces;
  faces.reserve(t.faces().size());
  for (const Face& f : t.faces()) faces.emplace_back(perm[f.v[0]], perm[f.v[1]], perm[f.v[2]]);
  return Triangulation::from_faces(t.vertex_count(), std::move(faces));
}

}  // namespace trisurf
