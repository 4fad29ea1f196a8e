#include <doctest.h>

#include "support.hpp"
#include "trisurf/catalog.hpp"
#include "trisurf/generator.hpp"
#include "trisurf/isomorphism.hpp"
#include "trisurf/moves.hpp"

using namespace trisurf;
using namespace testing;

namespace {

std::vector<Triangulation> drawings() {
  std::vector<Triangulation> out;
  for (const Figure& f : figures()) out.push_back(build_figure(f));
  return out;
}

}  // namespace

TEST_CASE("code layout and text form") {
  const CanonicalCode c = canonical_code(tetrahedron());
  CHECK(c.vertex_count() == 4);
  CHECK(c.code.size() == 1 + 3 * 4);
  CHECK(CanonicalCode::parse(c.to_string()) == c);
  CHECK(c.to_string().find("  ") == std::string::npos);
}

TEST_CASE("tetrahedron code is the same under all 24 relabelings") {
  std::vector<Vertex> p{0, 1, 2, 3};
  const CanonicalCode c = canonical_code(tetrahedron());
  int count = 0;
  do {
    CHECK(canonical_code(relabel(tetrahedron(), p)) == c);
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(count == 24);
}

TEST_CASE("codes decode back to an equivalent triangulation") {
  for (const Triangulation& t : drawings()) {
    const CanonicalCode c = canonical_code(t);
    const Triangulation back = from_code(c);
    CHECK(canonical_code(back) == c);
    CHECK(face_bijection_exists(back, t));
    CHECK(canonical_form(t) == back);
  }
}

TEST_CASE("codes are invariant under 100 random relabelings of each catalog drawing") {
  std::mt19937 rng(99);
  for (const Triangulation& t : drawings()) {
    const CanonicalCode c = canonical_code(t);
    for (int i = 0; i < 100; ++i) {
      const Triangulation r = relabel(t, random_permutation(t.vertex_count(), rng));
      CHECK(canonical_code(r) == c);
      if (i < 3) {
        CHECK(equivalent(r, t));
        CHECK(graph_isomorphic(r, t));
      }
    }
  }
}

TEST_CASE("code equality agrees with face-bijection search on all small triangulations") {
  std::vector<Triangulation> corpus;
  for (int n = 4; n <= 8; ++n)
    for (const CanonicalCode& c : enumerate_all(SurfaceId::sphere(), n)) corpus.push_back(from_code(c));
  for (int n = 6; n <= 8; ++n)
    for (const CanonicalCode& c : enumerate_all(SurfaceId::projective_plane(), n)) corpus.push_back(from_code(c));
  for (const CanonicalCode& c : enumerate_all(SurfaceId::klein_bottle(), 8)) corpus.push_back(from_code(c));

  std::mt19937 rng(5);
  int pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Triangulation shuffled = relabel(corpus[i], random_permutation(corpus[i].vertex_count(), rng));
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (corpus[i].vertex_count() != corpus[j].vertex_count()) continue;
      ++pairs;
      const bool same = canonical_code(shuffled) == canonical_code(corpus[j]);
      CHECK(same == face_bijection_exists(shuffled, corpus[j]));
      CHECK(same == (i == j));
    }
  }
  CHECK(pairs > 300);
}

TEST_CASE("code equality agrees with face-bijection search on split-derived instances") {
  std::mt19937 rng(17);
  const std::vector<Triangulation> base = drawings();
  for (int trial = 0; trial < 1000; ++trial) {
    Triangulation t = base[rng() % base.size()];
    // Grow by one or two random splits, staying at 11 vertices or fewer.
    const int splits = 1 + static_cast<int>(rng() % 2);
    for (int s = 0; s < splits && t.vertex_count() < 11; ++s) {
      const Vertex v = static_cast<Vertex>(rng() % t.vertex_count());
      const auto link = link_cycle(t, v);
      const std::size_t i = rng() % link.size();
      const std::size_t j = (i + 1 + rng() % (link.size() - 1)) % link.size();
      t = split(t, v, link[i], link[j]);
    }
    const Triangulation r = relabel(t, random_permutation(t.vertex_count(), rng));
    CHECK(canonical_code(r) == canonical_code(t));
    if (trial % 10 == 0) CHECK(face_bijection_exists(r, t));

    // A second, unrelated instance of the same size: codes equal exactly when a bijection exists.
    if (trial % 10 == 5) {
      Triangulation u = base[rng() % base.size()];
      while (u.vertex_count() < t.vertex_count()) {
        const Vertex v = static_cast<Vertex>(rng() % u.vertex_count());
        const auto link = link_cycle(u, v);
        u = split(u, v, link[0], link[1 + rng() % (link.size() - 1)]);
      }
      if (u.vertex_count() == t.vertex_count())
        CHECK((canonical_code(u) == canonical_code(t)) == face_bijection_exists(u, t));
    }
  }
}

TEST_CASE("equivalence implies graph isomorphism implies equal degree sequences") {
  const std::vector<Triangulation> all = drawings();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      const bool eq = equivalent(all[i], all[j]);
      const bool iso = graph_isomorphic(all[i], all[j]);
      CHECK(eq == (i == j));
      if (eq) CHECK(iso);
      if (iso) CHECK(degree_sequence(all[i]) == degree_sequence(all[j]));
    }
  }
}

TEST_CASE("degree-pair adjacency fingerprints") {
  const Triangulation kh10 = build_figure(figure("Kh10")), kh22 = build_figure(figure("Kh22"));
  const Triangulation kh15 = build_figure(figure("Kh15")), kh24 = build_figure(figure("Kh24"));
  CHECK(degree_sequence(kh10) == degree_sequence(kh22));
  CHECK(degree_sequence(kh15) == degree_sequence(kh24));
  CHECK(degree_pair_adjacent(kh10, 6) == true);
  CHECK(degree_pair_adjacent(kh22, 6) == false);
  CHECK(degree_pair_adjacent(kh15, 5) == true);
  CHECK(degree_pair_adjacent(kh24, 5) == false);
  CHECK_FALSE(degree_pair_adjacent(build_figure(figure("Kh14")), 5).has_value());
  CHECK_FALSE(equivalent(kh10, kh22));
  CHECK_FALSE(graph_isomorphic(kh10, kh22));
  CHECK_FALSE(graph_isomorphic(kh15, kh24));
}
