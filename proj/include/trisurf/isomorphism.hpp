#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trisurf/triangulation.hpp"

namespace trisurf {

/// Relabeling-invariant serialization of a triangulation. Equal codes mean a
/// vertex bijection carries one face set onto the other, so this is a
/// complete invariant for equivalence, not a hash.
///
/// Layout: the vertex count, then for every face in breadth-first discovery
/// order the labels of the three vertices seen across its three edges.
struct CanonicalCode {
  std::vector<std::uint8_t> code;

  std::string to_string() const;  // space-separated integers
  static CanonicalCode parse(const std::string& text);
  int vertex_count() const { return code.empty() ? 0 : code[0]; }

  auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

CanonicalCode canonical_code(const Triangulation& t);

/// Rebuilds the triangulation a code describes, in canonical labeling.
Triangulation from_code(const CanonicalCode& c);

/// t relabeled into its canonical labeling; equivalent inputs give identical outputs.
Triangulation canonical_form(const Triangulation& t);

/// Face-set isomorphism.
bool equivalent(const Triangulation& t1, const Triangulation& t2);

/// Isomorphism of the underlying simple graphs; the embedding is ignored.
bool graph_isomorphic(const Triangulation& t1, const Triangulation& t2);

/// When exactly two vertices have the given degree, whether they are adjacent.
std::optional<bool> degree_pair_adjacent(const Triangulation& t, int degree);

}  // namespace trisurf
