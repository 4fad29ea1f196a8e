#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisurf/drawing.hpp"
#include "trisurf/generator.hpp"
#include "trisurf/isomorphism.hpp"
#include "trisurf/triangulation.hpp"

namespace trisurf {

enum class EntryKind { Handle, Crosscap, ProjectivePlane };

std::string_view to_string(EntryKind k);

struct CatalogEntry {
  std::string name;
  EntryKind kind;
  Triangulation triangulation;
  DegreeSequence expected_degree_sequence;
};

/// One pass/fail line of a verification report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = {});
};

/// Kh1..Kh25, Kc1..Kc4, MP1, MP2 in that order.
const std::vector<std::string>& entry_names();
EntryKind kind_of(std::string_view name);
DegreeSequence expected_degree_sequence(std::string_view name);

/// A transcribed figure: Kh* are handle-type grid drawings, Kc* two glued hexagons.
struct Figure {
  std::string name;
  std::vector<Point> points;
  std::vector<Segment> segments;
};

const std::vector<Figure>& figures();
const Figure& figure(std::string_view name);
Triangulation build_figure(const Figure& f);

/// Antipodal gluing of each hexagon in the crosscap-type drawings.
std::vector<std::pair<Point, Point>> crosscap_glue();

/// Directory holding the .tri data files: $TRI_DATA_DIR, else the source tree's data/.
std::filesystem::path data_dir();

/// The named triangulations, read from data files. Entries that fail to load
/// are kept with their error so verification can report them.
class Catalog {
 public:
  static Catalog load(const std::filesystem::path& dir = data_dir());

  /// Throws std::out_of_range for unknown names and std::runtime_error for
  /// entries whose data file failed to load.
  const CatalogEntry& get(std::string_view name) const;
  std::vector<const CatalogEntry*> all() const;
  std::vector<const CatalogEntry*> klein_entries() const;

  /// Names whose files failed to load, with the reason.
  const std::vector<std::pair<std::string, std::string>>& load_errors() const { return errors_; }

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<std::pair<std::string, std::string>> errors_;
};

/// Runs every catalog check: load, validity, surface, irreducibility, degree
/// sequences, pairwise non-equivalence, and the degree distinguishers.
Report verify_catalog(const Catalog& catalog);

/// Which of the six bijections between the boundary triangles is used:
/// f2.v[perm[k]] is glued to f1.v[k], perm ranging over S3 in lexicographic order.
std::array<int, 3> gluing_permutation(int gluing);

/// Removes f1 from t1 and f2 from t2 and pastes the boundaries. Vertices of t1
/// keep their labels; unglued vertices of t2 follow in increasing order.
/// Throws ValidationError if the result is not a triangulation.
Triangulation crosscap_sum(const Triangulation& t1, const Face& f1, const Triangulation& t2, const Face& f2,
                           int gluing);

struct CrosscapClass {
  CanonicalCode code;
  Triangulation triangulation;
  std::string left;   // MP1 or MP2
  std::string right;
  Face left_face;
  Face right_face;
  int gluing = 0;
};

/// Irreducible crosscap sums of the two projective-plane triangulations over
/// both ordered pairs, every face pair and every gluing, one witness per class
/// (the first found in that order).
std::vector<CrosscapClass> enumerate_crosscap_irreducibles(const Triangulation& mp1, const Triangulation& mp2);

/// The irreducible projective-plane classes with at most seven vertices,
/// smallest first; the catalog's MP1 and MP2.
std::vector<Triangulation> projective_irreducibles();

}  // namespace trisurf
