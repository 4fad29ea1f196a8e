#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "trisurf/isomorphism.hpp"
#include "trisurf/triangulation.hpp"

namespace trisurf {

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ClassSet = std::set<CanonicalCode>;

struct GeneratorOptions {
  int jobs = 1;
  // Called from worker threads with a short status line; may be empty.
  std::function<void(const std::string&)> progress = {};
};

/// Largest vertex count accepted per surface; beyond it enumerate_* throws.
int vertex_limit(const SurfaceId& surface);

/// Every equivalence class of n-vertex triangulations of the surface.
/// Supported surfaces: sphere, projective plane, Klein bottle.
ClassSet enumerate_all(const SurfaceId& surface, int n, const GeneratorOptions& opts = {});

/// The irreducible classes only; prunes on minimum degree 4 and on closed
/// edges with fewer than three common neighbors, so it reaches larger n.
ClassSet enumerate_irreducible(const SurfaceId& surface, int n, const GeneratorOptions& opts = {});

/// Codes of every triangulation obtained from t by one vertex split.
ClassSet all_splits(const Triangulation& t);

}  // namespace trisurf
