#pragma once

#include <stdexcept>
#include <vector>

#include "trisurf/triangulation.hpp"

namespace trisurf {

enum class MoveErrorKind { NotAnEdge, NotContractible, InvalidSplit };

class MoveError : public std::runtime_error {
 public:
  MoveError(MoveErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  MoveErrorKind kind() const { return kind_; }

 private:
  MoveErrorKind kind_;
};

/// Number of 3-cycles of the graph through e, i.e. |N(a) ∩ N(c)|.
int count_triangles_through_edge(const Triangulation& t, Edge e);

/// An edge is contractible iff exactly its two incident faces are 3-cycles
/// through it. The tetrahedron is the exception: none of its edges contract.
bool is_contractible(const Triangulation& t, Edge e);

std::vector<Edge> contractible_edges(const Triangulation& t);

bool is_irreducible(const Triangulation& t);

/// Contracts e = ac. The merged vertex keeps min(a,c); labels above max(a,c)
/// shift down by one.
Triangulation contract(const Triangulation& t, Edge e);

/// Splits v along the link positions b and d. Vertex v keeps the arc running
/// from b to d in link_cycle(t, v) order; the new vertex n takes the other
/// arc. Both halves are adjacent to b and d, and the new edge is (v, n).
/// When b and d are adjacent in the link one arc is empty and the new vertex
/// of that side has degree 3.
Triangulation split(const Triangulation& t, Vertex v, Vertex b, Vertex d);

}  // namespace trisurf
