#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisurf {

using Vertex = int;

/// Vertex triple stored ascending.
struct Face {
  std::array<Vertex, 3> v{};

  Face() = default;
  Face(Vertex a, Vertex b, Vertex c);

  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  auto operator<=>(const Face&) const = default;
};

/// Unordered vertex pair stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}
  auto operator<=>(const Edge&) const = default;
};

enum class Violation {
  TooFewVertices,
  TooManyVertices,
  LabelOutOfRange,
  DegenerateFace,
  DuplicateFace,
  UnusedLabel,
  NonManifoldEdge,
  DisconnectedLink,
  Disconnected,
};

std::string_view to_string(Violation v);

struct Rejection {
  Violation kind;
  std::string detail;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Rejection r);
  const Rejection& rejection() const { return rejection_; }

 private:
  Rejection rejection_;
};

/// Checks the closed-surface triangulation invariants without building anything.
std::optional<Rejection> check_faces(int n, std::span<const Face> faces);

/// A simple graph triangulating a closed connected surface, held as its face set.
/// Immutable once built; the face list is sorted so that serialization is stable.
class Triangulation {
 public:
  static constexpr int kMaxVertices = 64;

  /// Validates and normalizes; throws ValidationError naming the broken invariant.
  static Triangulation from_faces(int n, std::vector<Face> faces);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(faces_.size()) * 3 / 2; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  std::span<const Face> faces() const { return faces_; }

  std::uint64_t neighbor_mask(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// The two vertices opposite edge ab; throws std::invalid_argument if ab is not an edge.
  std::array<Vertex, 2> opposite(Edge e) const;

  bool operator==(const Triangulation& o) const { return n_ == o.n_ && faces_ == o.faces_; }

 private:
  Triangulation(int n, std::vector<Face> faces);

  int n_ = 0;
  std::vector<Face> faces_;
  std::vector<std::uint64_t> adj_;
};

struct SurfaceId {
  bool orientable = true;
  int euler_characteristic = 2;

  std::string name() const;
  auto operator<=>(const SurfaceId&) const = default;

  static SurfaceId sphere() { return {true, 2}; }
  static SurfaceId projective_plane() { return {false, 1}; }
  static SurfaceId torus() { return {true, 0}; }
  static SurfaceId klein_bottle() { return {false, 0}; }
};

SurfaceId surface_of(const Triangulation& t);

struct DegreeSequence {
  std::vector<int> degrees;  // non-increasing

  std::string to_string() const;  // "(7,7,6,...)"
  auto operator<=>(const DegreeSequence&) const = default;
};

DegreeSequence degree_sequence(const Triangulation& t);

/// Neighbors of v in rotation order, normalized to the lexicographically least
/// rotation/reflection (starts at the smallest neighbor).
std::vector<Vertex> link_cycle(const Triangulation& t, Vertex v);

/// Applies a vertex relabeling: vertex v becomes perm[v].
Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm);

}  // namespace trisurf
