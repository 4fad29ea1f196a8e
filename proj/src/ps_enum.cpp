#include "trisurf/ps_enum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "trisurf/isomorphism.hpp"
#include "trisurf/moves.hpp"

namespace trisurf::ps {

std::string_view label_name(Vertex v) {
  static constexpr std::array<std::string_view, 9> names{"a", "b", "c", "x1", "y1", "z1", "x2", "y2", "z2"};
  return names.at(v);
}

Slope flip(Slope s) { return s == Slope::Up ? Slope::Down : Slope::Up; }

Edge PartialStructure::diagonal_edge(int row, int col) const {
  const auto& d = diagonal[row][col];
  if (!d) throw std::logic_error("quadrilateral has no diagonal");
  if (*d == Slope::Up) return {corner[row + 1][col], corner[row][col + 1]};
  return {corner[row][col], corner[row + 1][col + 1]};
}

std::set<Edge> PartialStructure::edges() const {
  std::set<Edge> out;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 3; ++k) out.emplace(corner[r][k], corner[r][k + 1]);
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 4; ++k) out.emplace(corner[r][k], corner[r + 1][k]);
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k)
      if (diagonal[r][k]) out.insert(diagonal_edge(r, k));
  return out;
}

std::array<Slope, 3> PartialStructure::middle_row() const {
  std::array<Slope, 3> out{};
  for (int k = 0; k < 3; ++k) {
    if (!diagonal[1][k]) throw std::logic_error("middle row is not fully assigned");
    out[k] = *diagonal[1][k];
  }
  return out;
}

bool PartialStructure::complete() const {
  for (const auto& row : diagonal)
    for (const auto& d : row)
      if (!d) return false;
  return true;
}

PartialStructure ps1() {
  PartialStructure p;
  p.corner = {{
      {a, x1, x2, a},
      {b, y1, y2, c},
      {c, z1, z2, b},
      {a, x1, x2, a},
  }};
  return p;
}

PartialStructure with_middle_row(std::array<Slope, 3> slopes) {
  PartialStructure p = ps1();
  for (int k = 0; k < 3; ++k) p.diagonal[1][k] = slopes[k];
  return p;
}

PartialStructure ps11() { return with_middle_row({Slope::Up, Slope::Up, Slope::Up}); }
PartialStructure ps12() { return with_middle_row({Slope::Down, Slope::Up, Slope::Down}); }

PartialStructure r12_shift(const PartialStructure& p) {
  PartialStructure q;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 3; ++k) q.corner[r][k] = p.corner[r][k + 1];
    q.corner[r][3] = p.corner[3 - r][1];
  }
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 2; ++k) q.diagonal[r][k] = p.diagonal[r][k + 1];
    const auto& moved = p.diagonal[2 - r][0];
    q.diagonal[r][2] = moved ? std::optional(flip(*moved)) : std::nullopt;
  }
  return q;
}

PartialStructure half_turn(const PartialStructure& p) {
  PartialStructure q;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) q.corner[r][k] = p.corner[3 - r][3 - k];
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k) q.diagonal[r][k] = p.diagonal[2 - r][2 - k];
  return q;
}

Triangulation to_triangulation(const PartialStructure& p) {
  std::vector<Face> faces;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) {
      const Vertex tl = p.corner[r][k], tr = p.corner[r][k + 1];
      const Vertex bl = p.corner[r + 1][k], br = p.corner[r + 1][k + 1];
      const auto& d = p.diagonal[r][k];
      if (!d) throw std::logic_error("structure is not complete");
      if (*d == Slope::Up) {
        faces.emplace_back(bl, tr, tl);
        faces.emplace_back(bl, tr, br);
      } else {
        faces.emplace_back(tl, br, tr);
        faces.emplace_back(tl, br, bl);
      }
    }
  }
  return Triangulation::from_faces(9, std::move(faces));
}

std::vector<std::vector<std::array<Slope, 3>>> middle_row_classes() {
  std::vector<std::vector<std::array<Slope, 3>>> classes;
  std::set<std::array<Slope, 3>> seen;
  for (int bits = 0; bits < 8; ++bits) {
    std::array<Slope, 3> start{};
    for (int k = 0; k < 3; ++k) start[k] = (bits >> k) & 1 ? Slope::Down : Slope::Up;
    if (seen.count(start)) continue;
    std::vector<std::array<Slope, 3>> cls;
    PartialStructure p = with_middle_row(start);
    while (!seen.count(p.middle_row())) {
      seen.insert(p.middle_row());
      cls.push_back(p.middle_row());
      p = r12_shift(p);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

PartialStructure ps11_forced() {
  PartialStructure p = ps11();
  p.diagonal[0][0] = Slope::Up;  // b-x1
  p.diagonal[0][1] = Slope::Up;  // y1-x2
  p.diagonal[2][1] = Slope::Up;  // x1-z2
  p.diagonal[2][2] = Slope::Up;  // x2-b
  return p;
}

std::vector<PartialStructure> ps11_raw_completions() {
  std::vector<PartialStructure> out;
  for (Slope top_right : {Slope::Up, Slope::Down}) {
    for (Slope bottom_left : {Slope::Up, Slope::Down}) {
      PartialStructure p = ps11_forced();
      p.diagonal[0][2] = top_right;    // Up is y2-a, Down is x2-c
      p.diagonal[2][0] = bottom_left;  // Up is a-z1, Down is c-x1
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Triangulation> complete_ps11() {
  std::map<CanonicalCode, Triangulation> classes;
  for (const PartialStructure& p : ps11_raw_completions()) {
    const bool y2a = p.diagonal_edge(0, 2) == Edge(y2, a);
    const bool az1 = p.diagonal_edge(2, 0) == Edge(a, z1);
    if (y2a != az1) continue;
    Triangulation t = to_triangulation(p);
    classes.emplace(canonical_code(t), t);
  }
  std::vector<Triangulation> out;
  for (auto& [code, t] : classes) out.push_back(t);
  return out;
}

std::string Coloring::to_string() const {
  std::string s(6, '0');
  for (int i = 0; i < 6; ++i)
    if (color(i)) s[i] = '1';
  return s;
}

Coloring Coloring::parse(std::string_view s) {
  if (s.size() != 6) throw std::invalid_argument("coloring needs six characters");
  Coloring c;
  for (int i = 0; i < 6; ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("coloring characters must be 0 or 1");
    if (s[i] == '1') c.bits |= 1U << i;
  }
  return c;
}

std::pair<int, int> letter_position(int letter) { return {letter < 3 ? 0 : 2, letter % 3}; }

const std::array<QuadDiagonals, 6>& coloring_table() {
  // Middle row of PS1.2: b-z1, z1-y2, y2-b.
  static const std::array<QuadDiagonals, 6> table{{
      {'A', {a, y1}, {b, x1}},
      {'B', {y1, x2}, {x1, y2}},
      {'C', {x2, c}, {y2, a}},
      {'D', {c, x1}, {a, z1}},
      {'E', {x1, z2}, {z1, x2}},
      {'F', {z2, a}, {x2, b}},
  }};
  return table;
}

PartialStructure coloring_structure(Coloring c) {
  PartialStructure p = ps12();
  for (int i = 0; i < 6; ++i) {
    const auto [r, k] = letter_position(i);
    const Edge want = c.color(i) ? coloring_table()[i].perpendicular : coloring_table()[i].parallel;
    for (Slope s : {Slope::Up, Slope::Down}) {
      p.diagonal[r][k] = s;
      if (p.diagonal_edge(r, k) == want) break;
    }
    if (p.diagonal_edge(r, k) != want) throw std::logic_error("coloring table does not match the grid");
  }
  return p;
}

Triangulation coloring_to_triangulation(Coloring c) { return to_triangulation(coloring_structure(c)); }

std::optional<Coloring> read_coloring(const PartialStructure& p) {
  if (!p.complete() || p.middle_row() != ps12().middle_row()) return std::nullopt;
  Coloring c;
  for (int i = 0; i < 6; ++i) {
    const auto [r, k] = letter_position(i);
    const Edge quad = p.diagonal_edge(r, k), middle = p.diagonal_edge(1, k);
    const bool share = quad.a == middle.a || quad.a == middle.b || quad.b == middle.a || quad.b == middle.b;
    if (share) c.bits |= 1U << i;
  }
  return c;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::array<bool, 6> done{};
  for (int i = 0; i < 6; ++i) {
    if (done[i]) continue;
    out += '(';
    for (int j = i; !done[j]; j = p[j]) {
      done[j] = true;
      out += static_cast<char>('A' + j);
    }
    out += ')';
  }
  return out;
}

const std::array<Permutation, 6>& listed_group() {
  // (A)(B)(C)(D)(E)(F), (ACE)(BDF), (AEC)(BFD), (AF)(BE)(CD), (AB)(CF)(DE), (AD)(BC)(EF)
  static const std::array<Permutation, 6> g{{
      {0, 1, 2, 3, 4, 5},
      {2, 3, 4, 5, 0, 1},
      {4, 5, 0, 1, 2, 3},
      {5, 4, 3, 2, 1, 0},
      {1, 0, 5, 4, 3, 2},
      {3, 2, 1, 0, 5, 4},
  }};
  return g;
}

namespace {

// Position map of a redrawing: where each lettered quadrilateral ends up.
Permutation induced(PartialStructure (*op)(const PartialStructure&), int times) {
  // Tag each quadrilateral by the pair of labels on its diagonal, which the
  // redrawing carries along unchanged.
  const PartialStructure base = coloring_structure(Coloring{0});
  PartialStructure moved = base;
  for (int i = 0; i < times; ++i) moved = op(moved);
  Permutation p{};
  for (int i = 0; i < 6; ++i) {
    const auto [r, k] = letter_position(i);
    const Edge e = base.diagonal_edge(r, k);
    p[i] = -1;
    for (int j = 0; j < 6; ++j) {
      const auto [r2, k2] = letter_position(j);
      if (moved.diagonal_edge(r2, k2) == e) p[i] = j;
    }
    if (p[i] < 0) throw std::logic_error("redrawing does not preserve the lettered quadrilaterals");
  }
  return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {  // f after g
  Permutation h{};
  for (int i = 0; i < 6; ++i) h[i] = f[g[i]];
  return h;
}

}  // namespace

Permutation half_turn_permutation() { return induced(&half_turn, 1); }
Permutation double_shift_permutation() { return induced(&r12_shift, 2); }

std::set<Permutation> generated_group(const std::vector<Permutation>& gens) {
  std::set<Permutation> group{{0, 1, 2, 3, 4, 5}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Permutation& x : std::vector<Permutation>(group.begin(), group.end()))
      for (const Permutation& g : gens) grew |= group.insert(compose(g, x)).second;
  }
  return group;
}

Coloring act(const Permutation& g, Coloring c) {
  Coloring out;
  for (int i = 0; i < 6; ++i)
    if (c.color(i)) out.bits |= 1U << g[i];
  return out;
}

std::vector<std::vector<Coloring>> orbits(const std::array<Permutation, 6>& group) {
  std::vector<std::vector<Coloring>> out;
  std::set<Coloring> seen;
  // Least first under the string order, which is what representatives use.
  std::vector<Coloring> all;
  for (int bits = 0; bits < 64; ++bits) all.push_back(Coloring{static_cast<std::uint8_t>(bits)});
  std::sort(all.begin(), all.end(), [](Coloring x, Coloring y) { return x.to_string() < y.to_string(); });
  for (Coloring c : all) {
    if (seen.count(c)) continue;
    std::set<Coloring> orbit;
    for (const Permutation& g : group) orbit.insert(act(g, c));
    std::vector<Coloring> sorted(orbit.begin(), orbit.end());
    std::sort(sorted.begin(), sorted.end(), [](Coloring x, Coloring y) { return x.to_string() < y.to_string(); });
    seen.insert(orbit.begin(), orbit.end());
    out.push_back(std::move(sorted));
  }
  return out;
}

double burnside_orbit_count(const std::array<Permutation, 6>& group) {
  int fixed = 0;
  for (const Permutation& g : group) {
    std::array<bool, 6> done{};
    int cycles = 0;
    for (int i = 0; i < 6; ++i) {
      if (done[i]) continue;
      ++cycles;
      for (int j = i; !done[j]; j = g[j]) done[j] = true;
    }
    fixed += 1 << cycles;
  }
  return static_cast<double>(fixed) / static_cast<double>(group.size());
}

std::string ClassOutcome::to_string() const {
  if (equivalent_to) return *equivalent_to;
  if (contractible_edges == 0) return "irreducible-uncataloged";
  return "contractible=" + std::to_string(contractible_edges);
}

ClassOutcome classify(const Triangulation& t, const Catalog& catalog) {
  ClassOutcome out;
  out.contractible_edges = static_cast<int>(contractible_edges(t).size());
  if (out.contractible_edges > 0) return out;
  const CanonicalCode code = canonical_code(t);
  for (const CatalogEntry* e : catalog.klein_entries()) {
    if (e->triangulation.vertex_count() == t.vertex_count() && canonical_code(e->triangulation) == code) {
      out.equivalent_to = e->name;
      break;
    }
  }
  return out;
}

const std::array<PublishedColoring, 16>& published_colorings() {
  static const std::array<PublishedColoring, 16> rows{{
      {"000000", "Kh14"},
      {"000001", "contractible=1"},
      {"000011", "Kh15"},
      {"000101", "contractible=1"},
      {"000110", "Kh24"},
      {"001001", "contractible=2"},
      {"111000", "Kh19"},
      {"001101", "contractible=1"},
      {"101010", "Kh23"},
      {"100101", "Kh22"},
      {"101101", "Kh24"},
      {"111001", "Kh20"},
      {"111010", "Kh21"},
      {"110011", "Kh17"},
      {"110111", "Kh18"},
      {"111111", "Kh16"},
  }};
  return rows;
}

std::vector<std::pair<Coloring, ClassOutcome>> classify_published(const Catalog& catalog) {
  std::vector<std::pair<Coloring, ClassOutcome>> out;
  for (const PublishedColoring& row : published_colorings()) {
    const Coloring c = Coloring::parse(row.coloring);
    out.emplace_back(c, classify(coloring_to_triangulation(c), catalog));
  }
  return out;
}

}  // namespace trisurf::ps
