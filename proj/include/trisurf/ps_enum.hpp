#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trisurf/catalog.hpp"
#include "trisurf/triangulation.hpp"

namespace trisurf::ps {

// The nine vertices of the partial structure, named as in the drawings:
// the left column reads a,b,c,a from the top, the right column a,c,b,a.
enum Label : Vertex { a, b, c, x1, y1, z1, x2, y2, z2 };
std::string_view label_name(Vertex v);

// Up runs from the lower-left to the upper-right corner of a quadrilateral.
enum class Slope { Up, Down };
Slope flip(Slope s);

/// The identified 4x4 grid: corner[row][col] with row 0 the top line, and one
/// optional diagonal per quadrilateral, diagonal[row][col]. Row 1 is the
/// middle row of quadrilaterals.
struct PartialStructure {
  std::array<std::array<Vertex, 4>, 4> corner{};
  std::array<std::array<std::optional<Slope>, 3>, 3> diagonal{};

  Edge diagonal_edge(int row, int col) const;  // requires the diagonal to be set
  std::set<Edge> edges() const;                // grid lines plus chosen diagonals
  std::array<Slope, 3> middle_row() const;
  bool complete() const;
  auto operator<=>(const PartialStructure&) const = default;
};

/// The bare grid, no diagonals.
PartialStructure ps1();
PartialStructure with_middle_row(std::array<Slope, 3> slopes);
PartialStructure ps11();  // middle row Up,Up,Up
PartialStructure ps12();  // middle row Down,Up,Down

/// Removes the left column, reflects it top-to-bottom and pastes it on the
/// right. Relabels the drawing only: edges() is unchanged.
PartialStructure r12_shift(const PartialStructure& p);

/// Turns the drawing through 180 degrees (both reflections at once).
PartialStructure half_turn(const PartialStructure& p);

/// Faces of a structure with every diagonal chosen; throws ValidationError if
/// they do not form a triangulation.
Triangulation to_triangulation(const PartialStructure& p);

/// The eight middle-row assignments split into classes under repeated shifts.
std::vector<std::vector<std::array<Slope, 3>>> middle_row_classes();

// ---- PS1.1 ----------------------------------------------------------------

/// PS1.1 with the forced diagonals b-x1, y1-x2 (top row) and x1-z2, x2-b
/// (bottom row); the top-right and bottom-left quadrilaterals stay open.
PartialStructure ps11_forced();

/// All four raw choices for the two open quadrilaterals, in order
/// (Up,Up), (Up,Down), (Down,Up), (Down,Down) for (top-right, bottom-left).
std::vector<PartialStructure> ps11_raw_completions();

/// Choices honoring the coupling y2-a <=> a-z1, deduplicated by canonical code.
std::vector<Triangulation> complete_ps11();

// ---- PS1.2 colorings -------------------------------------------------------

/// Colors of the quadrilaterals A..F; bit i is letter 'A'+i.
struct Coloring {
  std::uint8_t bits = 0;

  bool color(int letter) const { return (bits >> letter) & 1U; }
  std::string to_string() const;  // "ABCDEF" order, e.g. "100101"
  static Coloring parse(std::string_view s);
  auto operator<=>(const Coloring&) const = default;
};

/// Grid position of each letter: A,B,C along the top row, D,E,F the bottom.
std::pair<int, int> letter_position(int letter);

/// Per letter, the diagonal used for color 0 (parallel to the neighboring
/// middle diagonal) and for color 1 (sharing a vertex with it).
struct QuadDiagonals {
  char letter;
  Edge parallel;
  Edge perpendicular;
};
const std::array<QuadDiagonals, 6>& coloring_table();

PartialStructure coloring_structure(Coloring c);
Triangulation coloring_to_triangulation(Coloring c);

/// Reads the coloring back off a complete structure whose middle row is
/// Down,Up,Down; nullopt otherwise.
std::optional<Coloring> read_coloring(const PartialStructure& p);

/// A permutation of the letters: perm[i] is the position letter i moves to.
using Permutation = std::array<int, 6>;
std::string cycle_notation(const Permutation& p);

/// The six permutations as listed with the construction.
const std::array<Permutation, 6>& listed_group();

/// The letter permutations induced by half_turn and by two r12_shifts, read
/// off the drawings.
Permutation half_turn_permutation();
Permutation double_shift_permutation();

/// Closure of a generating set under composition.
std::set<Permutation> generated_group(const std::vector<Permutation>& gens);

Coloring act(const Permutation& g, Coloring c);

/// Orbits of all 64 colorings, each sorted, ordered by their least member
/// (the representative).
std::vector<std::vector<Coloring>> orbits(const std::array<Permutation, 6>& group = listed_group());

/// Orbit count by Burnside: average number of fixed colorings.
double burnside_orbit_count(const std::array<Permutation, 6>& group = listed_group());

struct ClassOutcome {
  std::optional<std::string> equivalent_to;  // catalog name when irreducible
  int contractible_edges = 0;

  std::string to_string() const;  // "Kh22", "contractible=1", or "irreducible-uncataloged"
};

ClassOutcome classify(const Triangulation& t, const Catalog& catalog);

struct PublishedColoring {
  std::string_view coloring;
  std::string_view expected;  // catalog name, or "contractible=<k>"
};

/// The sixteen published rows in their printed order.
const std::array<PublishedColoring, 16>& published_colorings();

std::vector<std::pair<Coloring, ClassOutcome>> classify_published(const Catalog& catalog);

}  // namespace trisurf::ps
