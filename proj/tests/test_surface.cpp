#include <doctest.h>

#include "support.hpp"
#include "trisurf/catalog.hpp"

using namespace trisurf;
using namespace testing;

namespace {

Violation rejection_of(int n, const std::vector<Triple>& faces) {
  std::vector<Face> fs;
  for (const Triple& f : faces) fs.emplace_back(f[0], f[1], f[2]);
  try {
    Triangulation::from_faces(n, fs);
  } catch (const ValidationError& e) {
    return e.rejection().kind;
  }
  FAIL("accepted an invalid face list");
  return Violation::TooFewVertices;
}

}  // namespace

TEST_CASE("tetrahedron is a sphere") {
  const Triangulation t = tetrahedron();
  CHECK(t.vertex_count() == 4);
  CHECK(t.edge_count() == 6);
  CHECK(surface_of(t) == SurfaceId::sphere());
  CHECK(degree_sequence(t).to_string() == "(3,3,3,3)");
  CHECK(link_cycle(t, 0) == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("faces are stored sorted whatever the input order") {
  const Triangulation t = make(4, {{3, 2, 1}, {2, 0, 3}, {1, 0, 3}, {0, 2, 1}});
  CHECK(t == tetrahedron());
  CHECK(t.faces()[0] == Face(0, 1, 2));
}

TEST_CASE("rejections name the broken invariant") {
  CHECK(rejection_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {1, 2, 4}}) == Violation::NonManifoldEdge);
  CHECK(rejection_of(3, {{0, 1, 2}, {0, 1, 2}}) == Violation::TooFewVertices);
  CHECK(rejection_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 7}}) == Violation::LabelOutOfRange);
  CHECK(rejection_of(4, {{0, 1, 1}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) == Violation::DegenerateFace);
  CHECK(rejection_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) == Violation::UnusedLabel);
  CHECK(rejection_of(4, {{0, 1, 2}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}}) == Violation::DuplicateFace);

  // Two tetrahedra glued at a vertex: every edge is fine, vertex 0's link is two triangles.
  CHECK(rejection_of(7, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}}) ==
        Violation::DisconnectedLink);
  // Two disjoint tetrahedra.
  CHECK(rejection_of(8, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}}) ==
        Violation::Disconnected);
}

TEST_CASE("check_faces agrees with from_faces") {
  const Triangulation tet = tetrahedron();
  std::vector<Face> good(tet.faces().begin(), tet.faces().end());
  CHECK_FALSE(check_faces(4, good).has_value());
  good.pop_back();
  REQUIRE(check_faces(4, good).has_value());
  CHECK(check_faces(4, good)->kind == Violation::NonManifoldEdge);
}

TEST_CASE("known small surfaces") {
  CHECK(surface_of(octahedron()) == SurfaceId::sphere());
  CHECK(surface_of(double_pyramid()) == SurfaceId::sphere());
  CHECK(degree_sequence(double_pyramid()).to_string() == "(4,4,4,3,3)");
  const Triangulation k6 = k6_projective();
  CHECK(surface_of(k6) == SurfaceId::projective_plane());
  CHECK(k6.edge_count() == 15);
  CHECK(SurfaceId::projective_plane().name() == "projective plane");
  CHECK(SurfaceId::klein_bottle().name() == "Klein bottle");
}

TEST_CASE("surface and link shape on the catalog drawings") {
  for (const Figure& f : figures()) {
    CAPTURE(f.name);
    const Triangulation t = build_figure(f);
    CHECK(surface_of(t) == SurfaceId::klein_bottle());
    CHECK(3 * t.face_count() == 2 * t.edge_count());
    CHECK(t.vertex_count() - t.edge_count() + t.face_count() == 0);
    const DegreeSequence ds = degree_sequence(t);
    CHECK(std::is_sorted(ds.degrees.rbegin(), ds.degrees.rend()));
    for (Vertex v = 0; v < t.vertex_count(); ++v) CHECK(link_cycle(t, v).size() == static_cast<std::size_t>(t.degree(v)));

    const Closed oracle = closed_surface(t.vertex_count(), triples(t));
    CHECK(oracle.ok);
    CHECK(oracle.euler == 0);
    CHECK_FALSE(oracle.orientable);
  }
  const Triangulation kh14 = build_figure(figure("Kh14"));
  for (Vertex v = 0; v < 9; ++v) CHECK(link_cycle(kh14, v).size() == 6);
  const Triangulation kh25 = build_figure(figure("Kh25"));
  for (Vertex v = 0; v < 10; ++v)
    if (kh25.degree(v) == 4) CHECK(link_cycle(kh25, v).size() == 4);
}

TEST_CASE("link_cycle walks consecutive faces") {
  const Triangulation t = build_figure(figure("Kh7"));
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto cyc = link_cycle(t, v);
    REQUIRE(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
    CHECK(cyc[1] < cyc.back());
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Face f(v, cyc[i], cyc[(i + 1) % cyc.size()]);
      CHECK(std::binary_search(t.faces().begin(), t.faces().end(), f));
    }
  }
}

TEST_CASE("surface is invariant under relabeling") {
  std::mt19937 rng(7);
  for (const Figure& f : figures()) {
    const Triangulation t = build_figure(f);
    for (int i = 0; i < 5; ++i) {
      const Triangulation r = relabel(t, random_permutation(t.vertex_count(), rng));
      CHECK(surface_of(r) == surface_of(t));
      CHECK(degree_sequence(r) == degree_sequence(t));
    }
  }
}

TEST_CASE("revalidating accepted values never fails") {
  for (const Figure& f : figures()) {
    const Triangulation t = build_figure(f);
    std::vector<Face> faces(t.faces().begin(), t.faces().end());
    CHECK_FALSE(check_faces(t.vertex_count(), faces).has_value());
    CHECK(Triangulation::from_faces(t.vertex_count(), faces) == t);
  }
}

TEST_CASE("validation agrees with the surface oracle on random face lists") {
  // Random perturbations of a valid triangulation: drop, duplicate or rewire faces.
  std::mt19937 rng(11);
  const Triangulation base = build_figure(figure("Kh14"));
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Triple> faces = triples(base);
    const int kind = static_cast<int>(rng() % 3);
    const std::size_t i = rng() % faces.size();
    if (kind == 0)
      faces.erase(faces.begin() + static_cast<long>(i));
    else if (kind == 1)
      faces.push_back(faces[i]);
    else
      faces[i][rng() % 3] = static_cast<int>(rng() % 9);
    std::vector<Face> fs;
    bool degenerate = false;
    for (const Triple& f : faces) {
      degenerate |= f[0] == f[1] || f[1] == f[2] || f[0] == f[2];
      if (!degenerate) fs.emplace_back(f[0], f[1], f[2]);
    }
    const bool accepted = !degenerate && !check_faces(9, fs).has_value();
    CHECK(accepted == closed_surface(9, faces).ok);
  }
}
