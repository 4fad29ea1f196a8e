#include <doctest.h>

#include <map>

#include "support.hpp"
#include "trisurf/catalog.hpp"
#include "trisurf/isomorphism.hpp"
#include "trisurf/moves.hpp"
#include "trisurf/ps_enum.hpp"

// Inside the namespace so the vertex names win over <cmath>'s y1.
namespace trisurf::ps {

using namespace testing;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::load();
  return c;
}

std::vector<Coloring> all_colorings() {
  std::vector<Coloring> out;
  for (int b = 0; b < 64; ++b) out.push_back(Coloring{static_cast<std::uint8_t>(b)});
  return out;
}

// Catalog name by face-bijection search, or empty.
std::string identify(const Triangulation& t) {
  for (const CatalogEntry* e : catalog().klein_entries())
    if (face_bijection_exists(t, e->triangulation)) return e->name;
  return {};
}

int oracle_contractible(const Triangulation& t) {
  int k = 0;
  for (const Edge& e : t.edges()) k += contracts_cleanly(t, e.a, e.b);
  return k;
}

}  // namespace

TEST_CASE("the grid has nine quadrilaterals and the drawn corner labels") {
  const PartialStructure p = ps1();
  using Row = std::array<Vertex, 4>;
  CHECK(p.corner[0] == Row{a, x1, x2, a});
  CHECK(p.corner[1] == Row{b, y1, y2, c});
  CHECK(p.corner[2] == Row{c, z1, z2, b});
  CHECK(p.corner[3] == p.corner[0]);
  CHECK(p.edges().size() == 18);
  CHECK_FALSE(p.complete());
  CHECK(label_name(y2) == "y2");
}

TEST_CASE("PS1.1 and PS1.2 middle rows") {
  CHECK(ps11().middle_row() == std::array<Slope, 3>{Slope::Up, Slope::Up, Slope::Up});
  CHECK(ps12().middle_row() == std::array<Slope, 3>{Slope::Down, Slope::Up, Slope::Down});
  CHECK(ps12().diagonal_edge(1, 0) == Edge(b, z1));
  CHECK(ps12().diagonal_edge(1, 1) == Edge(z1, y2));
  CHECK(ps12().diagonal_edge(1, 2) == Edge(y2, b));
}

TEST_CASE("r12 shift redraws without changing the labeled edges") {
  for (int bits = 0; bits < 8; ++bits) {
    std::array<Slope, 3> row{};
    for (int k = 0; k < 3; ++k) row[k] = (bits >> k) & 1 ? Slope::Down : Slope::Up;
    const PartialStructure p = with_middle_row(row);
    PartialStructure q = p;
    for (int i = 1; i <= 6; ++i) {
      q = r12_shift(q);
      CHECK(q.edges() == p.edges());
    }
    CHECK(q == p);
  }
  // The reflected column's diagonal changes slope in the drawing.
  CHECK(r12_shift(ps11()).middle_row() == std::array<Slope, 3>{Slope::Up, Slope::Up, Slope::Down});
}

TEST_CASE("the eight middle rows fall into two shift classes") {
  const auto classes = middle_row_classes();
  REQUIRE(classes.size() == 2);
  std::set<std::array<Slope, 3>> seen;
  int with11 = 0, with12 = 0;
  for (const auto& cls : classes) {
    for (const auto& row : cls) seen.insert(row);
    with11 += std::count(cls.begin(), cls.end(), ps11().middle_row());
    with12 += std::count(cls.begin(), cls.end(), ps12().middle_row());
    CHECK(std::count(cls.begin(), cls.end(), ps11().middle_row()) +
              std::count(cls.begin(), cls.end(), ps12().middle_row()) ==
          1);
  }
  CHECK(seen.size() == 8);
  CHECK(with11 == 1);
  CHECK(with12 == 1);
  CHECK(classes[0].size() + classes[1].size() == 8);
}

TEST_CASE("PS1.1 forced diagonals") {
  const PartialStructure p = ps11_forced();
  const std::set<Edge> e = p.edges();
  for (const Edge& want : {Edge(b, y1), Edge(y1, x2), Edge(x2, b), Edge(z2, b), Edge(b, x1), Edge(x1, z2)})
    CHECK(e.count(want) == 1);
  CHECK_FALSE(p.diagonal[0][2].has_value());
  CHECK_FALSE(p.diagonal[2][0].has_value());
}

TEST_CASE("PS1.1 completes to Kh14 and Kh15 only") {
  const auto done = complete_ps11();
  REQUIRE(done.size() == 2);
  std::set<std::string> names;
  for (const Triangulation& t : done) {
    CHECK(t.vertex_count() == 9);
    CHECK(surface_of(t) == SurfaceId::klein_bottle());
    CHECK(is_irreducible(t));
    names.insert(identify(t));
  }
  CHECK(names == std::set<std::string>{"Kh14", "Kh15"});
}

TEST_CASE("uncoupled PS1.1 choices fail or reduce") {
  const auto raw = ps11_raw_completions();
  REQUIRE(raw.size() == 4);
  for (const PartialStructure& p : raw) {
    const bool y2a = p.diagonal_edge(0, 2) == Edge(y2, a);
    const bool az1 = p.diagonal_edge(2, 0) == Edge(a, z1);
    bool valid = true;
    int contractible = 0;
    try {
      const Triangulation t = to_triangulation(p);
      contractible = oracle_contractible(t);
    } catch (const ValidationError&) {
      valid = false;
    }
    if (y2a != az1) CHECK((!valid || contractible > 0));
    else CHECK((valid && contractible == 0));
  }
}

TEST_CASE("coloring strings") {
  CHECK(Coloring::parse("100101").to_string() == "100101");
  CHECK(Coloring::parse("100000").color(0));
  CHECK_FALSE(Coloring::parse("100000").color(5));
  CHECK_THROWS(Coloring::parse("10010"));
  CHECK_THROWS(Coloring::parse("10010x"));
}

TEST_CASE("the diagonal table is geometric") {
  // Each listed diagonal joins opposite corners of its quadrilateral, and the
  // color-0 one has the same slope as the middle diagonal below or above it.
  const PartialStructure mid = ps12();
  for (int i = 0; i < 6; ++i) {
    const auto [r, k] = letter_position(i);
    const QuadDiagonals& q = coloring_table()[i];
    CHECK(q.letter == 'A' + i);
    const Edge up(mid.corner[r + 1][k], mid.corner[r][k + 1]);
    const Edge down(mid.corner[r][k], mid.corner[r + 1][k + 1]);
    const Edge same_slope = *mid.diagonal[1][k] == Slope::Up ? up : down;
    const Edge other_slope = *mid.diagonal[1][k] == Slope::Up ? down : up;
    CHECK(q.parallel == same_slope);
    CHECK(q.perpendicular == other_slope);
  }
}

TEST_CASE("every coloring reads back through the shared-vertex rule") {
  for (Coloring c : all_colorings()) {
    const PartialStructure p = coloring_structure(c);
    REQUIRE(p.complete());
    CHECK(read_coloring(p) == c);
    for (int i = 0; i < 6; ++i) {
      const auto [r, k] = letter_position(i);
      CHECK((p.diagonal[r][k] == p.diagonal[1][k]) == !c.color(i));
    }
  }
  CHECK_FALSE(read_coloring(ps11_raw_completions()[0]).has_value());
}

TEST_CASE("all 64 colorings give 9-vertex Klein bottles") {
  for (Coloring c : all_colorings()) {
    const Triangulation t = coloring_to_triangulation(c);
    const Closed oracle = closed_surface(9, triples(t));
    CHECK(oracle.ok);
    CHECK(oracle.euler == 0);
    CHECK_FALSE(oracle.orientable);
  }
}

TEST_CASE("the listed group") {
  const auto& g = listed_group();
  std::vector<std::string> cycles;
  for (const Permutation& p : g) cycles.push_back(cycle_notation(p));
  CHECK(cycles == std::vector<std::string>{"(A)(B)(C)(D)(E)(F)", "(ACE)(BDF)", "(AEC)(BFD)", "(AF)(BE)(CD)",
                                           "(AB)(CF)(DE)", "(AD)(BC)(EF)"});

  // Composition table stays inside the set.
  const std::set<Permutation> set(g.begin(), g.end());
  for (const Permutation& p : g)
    for (const Permutation& q : g) {
      Permutation pq{};
      for (int i = 0; i < 6; ++i) pq[i] = p[q[i]];
      CHECK(set.count(pq) == 1);
    }
  CHECK(generated_group({g.begin(), g.end()}) == set);

  CHECK(cycle_notation(half_turn_permutation()) == "(AF)(BE)(CD)");
  const std::string shift2 = cycle_notation(double_shift_permutation());
  CHECK((shift2 == "(ACE)(BDF)" || shift2 == "(AEC)(BFD)"));
  CHECK(generated_group({half_turn_permutation(), double_shift_permutation()}) == set);
}

TEST_CASE("the drawn symmetries carry colorings to colorings") {
  for (Coloring c : all_colorings()) {
    const PartialStructure turned = half_turn(coloring_structure(c));
    CHECK(read_coloring(turned) == act(half_turn_permutation(), c));
    const PartialStructure shifted = r12_shift(r12_shift(coloring_structure(c)));
    CHECK(read_coloring(shifted) == act(double_shift_permutation(), c));
  }
}

TEST_CASE("sixteen orbits, by partition and by Burnside") {
  // Brute-force partition with union-find over all group elements.
  std::array<int, 64> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const Permutation& g : listed_group())
    for (int bits = 0; bits < 64; ++bits) {
      int image = 0;
      for (int i = 0; i < 6; ++i)
        if (bits >> i & 1) image |= 1 << g[i];
      parent[find(bits)] = find(image);
    }
  std::set<int> roots;
  for (int bits = 0; bits < 64; ++bits) roots.insert(find(bits));
  CHECK(roots.size() == 16);

  const auto orbs = orbits();
  CHECK(orbs.size() == 16);
  std::size_t covered = 0;
  for (const auto& o : orbs) {
    covered += o.size();
    for (Coloring c : o) CHECK(find(c.bits) == find(o.front().bits));
    for (Coloring c : o) CHECK(o.front().to_string() <= c.to_string());
  }
  CHECK(covered == 64);
  CHECK(burnside_orbit_count() == doctest::Approx(96.0 / 6.0));
  CHECK((64 + 4 + 4 + 8 + 8 + 8) == 96);
}

TEST_CASE("colorings in one orbit give equivalent triangulations") {
  for (Coloring c : all_colorings()) {
    const CanonicalCode code = canonical_code(coloring_to_triangulation(c));
    for (const Permutation& g : listed_group())
      CHECK(canonical_code(coloring_to_triangulation(act(g, c))) == code);
  }
  // Spot check with the bijection oracle.
  const Coloring c = Coloring::parse("110100");
  for (const Permutation& g : listed_group())
    CHECK(face_bijection_exists(coloring_to_triangulation(c), coloring_to_triangulation(act(g, c))));
}

TEST_CASE("published colorings, classified independently") {
  const auto rows = published_colorings();
  std::map<std::string, int> tally;
  for (const PublishedColoring& row : rows) {
    CAPTURE(row.coloring);
    const Triangulation t = coloring_to_triangulation(Coloring::parse(row.coloring));
    const int k = oracle_contractible(t);
    const std::string got = k > 0 ? "contractible=" + std::to_string(k) : identify(t);
    CHECK(got == row.expected);
    ++tally[k > 0 ? got : "named"];
  }
  CHECK(tally["named"] == 12);
  CHECK(tally["contractible=1"] == 3);
  CHECK(tally["contractible=2"] == 1);

  // The library's own classification gives the same strings.
  const auto computed = classify_published(catalog());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(computed[i].second.to_string() == rows[i].expected);
}

TEST_CASE("published colorings cover all sixteen orbits") {
  std::set<std::string> reps;
  for (const auto& o : orbits()) reps.insert(o.front().to_string());
  std::set<std::string> seen;
  for (const PublishedColoring& row : published_colorings()) {
    const Coloring c = Coloring::parse(row.coloring);
    for (const auto& o : orbits())
      if (std::find(o.begin(), o.end(), c) != o.end()) seen.insert(o.front().to_string());
  }
  CHECK(seen == reps);
}

TEST_CASE("PS1 yields exactly Kh14 to Kh24") {
  std::set<std::string> names;
  for (Coloring c : all_colorings()) {
    const ClassOutcome o = classify(coloring_to_triangulation(c), catalog());
    if (o.contractible_edges == 0) {
      REQUIRE(o.equivalent_to.has_value());
      names.insert(*o.equivalent_to);
    }
  }
  for (const Triangulation& t : complete_ps11()) names.insert(*classify(t, catalog()).equivalent_to);
  std::set<std::string> want;
  for (int i = 14; i <= 24; ++i) want.insert("Kh" + std::to_string(i));
  CHECK(names == want);
}

}  // namespace trisurf::ps
