// Fixtures and independent oracles shared by the test binaries. Nothing here
// calls into the library's validation, contraction or canonical code.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "trisurf/triangulation.hpp"

namespace testing {

using trisurf::Face;
using trisurf::Triangulation;
using trisurf::Vertex;

using Triple = std::array<int, 3>;

inline Triple sorted(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline std::vector<Triple> triples(const Triangulation& t) {
  std::vector<Triple> out;
  for (const Face& f : t.faces()) out.push_back(f.v);
  return out;
}

inline Triangulation make(int n, const std::vector<Triple>& faces) {
  std::vector<Face> fs;
  for (const Triple& f : faces) fs.emplace_back(f[0], f[1], f[2]);
  return Triangulation::from_faces(n, std::move(fs));
}

inline Triangulation tetrahedron() { return make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

// Poles 0 and 5; equator 1,2,3,4.
inline Triangulation octahedron() {
  return make(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}, {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 1, 4}});
}

// Apexes 3 and 4 over the triangle 0,1,2.
inline Triangulation double_pyramid() {
  return make(5, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
}

// K6 on the projective plane: the half-icosahedron.
inline Triangulation k6_projective() {
  return make(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// ---- surface oracle ----------------------------------------------------------

struct Closed {
  bool ok = false;
  int euler = 0;
  bool orientable = false;
};

// Checks the closed-surface conditions directly from the triple list and
// computes the surface by counting and by the orientation double cover.
inline Closed closed_surface(int n, const std::vector<Triple>& faces) {
  Closed out;
  std::set<Triple> unique;
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Triple& f = faces[i];
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return out;
    for (int x : f)
      if (x < 0 || x >= n) return out;
    const Triple s = sorted(f[0], f[1], f[2]);
    if (!unique.insert(s).second) return out;
    edge_faces[{s[0], s[1]}].push_back(static_cast<int>(i));
    edge_faces[{s[0], s[2]}].push_back(static_cast<int>(i));
    edge_faces[{s[1], s[2]}].push_back(static_cast<int>(i));
  }
  for (const auto& [e, fs] : edge_faces)
    if (fs.size() != 2) return out;

  // Link of v: edges opposite v in its faces must form one cycle over all its neighbors.
  for (int v = 0; v < n; ++v) {
    std::map<int, std::vector<int>> link;
    for (const Triple& f : faces) {
      if (std::find(f.begin(), f.end(), v) == f.end()) continue;
      std::vector<int> o;
      for (int x : f)
        if (x != v) o.push_back(x);
      link[o[0]].push_back(o[1]);
      link[o[1]].push_back(o[0]);
    }
    if (link.size() < 3) return out;
    for (const auto& [x, ys] : link)
      if (ys.size() != 2) return out;
    int prev = -1, cur = link.begin()->first, steps = 0;
    do {
      const int next = link[cur][0] == prev ? link[cur][1] : link[cur][0];
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != link.begin()->first && steps <= static_cast<int>(link.size()));
    if (steps != static_cast<int>(link.size())) return out;
  }

  // Orientation double cover: node 2i+s is face i with orientation s. Two
  // copies meeting along an edge are joined when they induce opposite
  // directions on it.
  const int m = static_cast<int>(faces.size());
  std::vector<int> parent(2 * m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto direction = [&](int face, int s, int a, int b) {
    const Triple& f = faces[face];
    for (int k = 0; k < 3; ++k)
      if (f[k] == a) return (f[(k + 1) % 3] == b) != (s == 1);
    return false;
  };
  for (const auto& [e, fs] : edge_faces)
    for (int s = 0; s < 2; ++s)
      for (int u = 0; u < 2; ++u)
        if (direction(fs[0], s, e.first, e.second) != direction(fs[1], u, e.first, e.second))
          parent[find(2 * fs[0] + s)] = find(2 * fs[1] + u);
  std::set<int> roots;
  for (int i = 0; i < 2 * m; ++i) roots.insert(find(i));
  // A connected surface has a double cover with one component (non-orientable)
  // or two (orientable); more means the complex is disconnected.
  if (roots.size() > 2) return out;
  std::set<int> used;
  for (const Triple& f : faces) used.insert(f.begin(), f.end());
  if (static_cast<int>(used.size()) != n) return out;

  out.ok = true;
  out.orientable = roots.size() == 2;
  out.euler = n - static_cast<int>(edge_faces.size()) + m;
  return out;
}

// ---- contraction oracle ------------------------------------------------------

// Contracts by substituting a for c in every face and dropping the faces
// through ac, then asks the surface oracle whether the result is a closed
// surface of the same type.
inline bool contracts_cleanly(const Triangulation& t, int a, int c) {
  const Closed before = closed_surface(t.vertex_count(), triples(t));
  std::vector<Triple> out;
  for (Triple f : triples(t)) {
    const bool has_a = std::find(f.begin(), f.end(), a) != f.end();
    const bool has_c = std::find(f.begin(), f.end(), c) != f.end();
    if (has_a && has_c) continue;
    for (int& x : f)
      if (x == c) x = a;
    out.push_back(f);
  }
  // Compact labels so the oracle sees 0..n-2.
  for (Triple& f : out)
    for (int& x : f)
      if (x > c) --x;
  const Closed after = closed_surface(t.vertex_count() - 1, out);
  return after.ok && after.euler == before.euler && after.orientable == before.orientable;
}

// ---- equivalence oracle ------------------------------------------------------

// Searches for a vertex bijection carrying the face set of s onto that of t.
inline bool face_bijection_exists(const Triangulation& s, const Triangulation& t) {
  const int n = s.vertex_count();
  if (n != t.vertex_count() || s.face_count() != t.face_count()) return false;
  const std::vector<Triple> tf = triples(t);
  const std::set<Triple> target(tf.begin(), tf.end());
  std::vector<std::vector<Triple>> faces_by_max(n);
  for (const Triple& f : triples(s)) faces_by_max[f[2]].push_back(f);

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || s.degree(v) != t.degree(w)) continue;
      image[v] = w;
      bool ok = true;
      for (const Triple& f : faces_by_max[v])
        if (!target.count(sorted(image[f[0]], image[f[1]], image[f[2]]))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    image[v] = -1;
    return false;
  };
  return extend(extend, 0);
}

}  // namespace testing
