#include "trisurf/generator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "trisurf/moves.hpp"

namespace trisurf {

namespace {

constexpr int kMaxN = 16;
// Depth at which the search tree is dealt out to workers.
constexpr int kSplitDepth = 3;

bool supported(const SurfaceId& s) {
  return s == SurfaceId::sphere() || s == SurfaceId::projective_plane() || s == SurfaceId::klein_bottle();
}

// Depth-first completion of vertex links. Vertex 0 carries the maximum degree
// and its star is fixed as 0,(1..d); afterwards the open edge at the lowest
// unfinished vertex is closed by every admissible third vertex, introducing
// unused labels only in increasing order.
class LinkSearch {
 public:
  LinkSearch(int n, const SurfaceId& surface, int max_degree, bool irreducible_only, int worker, int jobs)
      : n_(n),
        surface_(surface),
        max_degree_(max_degree),
        target_faces_(2 * (n - surface.euler_characteristic)),
        target_edges_(3 * (n - surface.euler_characteristic)),
        irreducible_only_(irreducible_only),
        // The tetrahedron is irreducible with degree 3 and only two common neighbors per edge.
        prune_irreducible_(irreducible_only && n > 4),
        worker_(worker),
        jobs_(jobs) {
    for (auto& row : third_)
      for (auto& slot : row) slot = {-1, -1};
  }

  void run(ClassSet& out) {
    out_ = &out;
    const int d = max_degree_;
    for (int i = 1; i <= d; ++i) mark_used(i);
    mark_used(0);
    bool ok = true;
    for (int i = 1; i <= d && ok; ++i) ok = add_face(0, i, i == d ? 1 : i + 1);
    if (ok) extend(0);
  }

 private:
  struct Undo {
    std::array<Vertex, 3> face;
    std::uint8_t closed_mask;  // bit k: face[k] was closed by this face
    bool fresh;                // face[2] was first used here
  };

  void mark_used(Vertex x) {
    used_[x] = true;
    ++used_count_;
  }

  // 0: no cycle closes; 1: x's link closes into a full cycle; -1: it would
  // close a cycle that leaves part of the link out (pinched vertex).
  int link_status(Vertex x, Vertex p, Vertex q) const {
    if (count_[x][p] != 1 || count_[x][q] != 1) return 0;
    int vertices = 1;
    Vertex prev = p, cur = third_[x][p][0];
    ++vertices;
    while (count_[x][cur] == 2) {
      const Vertex next = third_[x][cur][0] == prev ? third_[x][cur][1] : third_[x][cur][0];
      prev = cur;
      cur = next;
      ++vertices;
    }
    if (cur != q) return 0;
    return vertices == degree_[x] ? 1 : -1;
  }

  void link_pair(Vertex a, Vertex b, Vertex c) {
    if (count_[a][b]++ == 0) {
      ++degree_[a];
      ++degree_[b];
      nbr_[a] |= 1U << b;
      nbr_[b] |= 1U << a;
      ++edges_;
    }
    count_[b][a] = count_[a][b];
    third_[a][b][count_[a][b] - 1] = c;
    third_[b][a][count_[a][b] - 1] = c;
  }

  void unlink_pair(Vertex a, Vertex b, Vertex c) {
    auto& t = third_[a][b];
    if (t[0] == c) t[0] = t[1];
    t[1] = -1;
    third_[b][a] = t;
    if (--count_[a][b] == 0) {
      --degree_[a];
      --degree_[b];
      nbr_[a] &= ~(1U << b);
      nbr_[b] &= ~(1U << a);
      --edges_;
    }
    count_[b][a] = count_[a][b];
  }

  // Checks and applies face (a,b,c) where ab already exists or a==0 during the
  // star; c may be a fresh label (already marked used by the caller).
  bool add_face(Vertex a, Vertex b, Vertex c) {
    if (closed_[a] || closed_[b] || closed_[c]) return false;
    if (count_[a][b] >= 2 || count_[a][c] >= 2 || count_[b][c] >= 2) return false;
    if (faces_.size() + 1 > static_cast<std::size_t>(target_faces_)) return false;
    const int nab = count_[a][b] == 0, nac = count_[a][c] == 0, nbc = count_[b][c] == 0;
    if (degree_[a] + nab + nac > max_degree_ || degree_[b] + nab + nbc > max_degree_ ||
        degree_[c] + nac + nbc > max_degree_)
      return false;
    if (edges_ + nab + nac + nbc > target_edges_) return false;
    // A duplicate face shows up as ab already carrying c.
    if (count_[a][b] == 1 && third_[a][b][0] == c) return false;

    const int sa = link_status(a, b, c), sb = link_status(b, a, c), sc = link_status(c, a, b);
    if (sa < 0 || sb < 0 || sc < 0) return false;

    link_pair(a, b, c);
    link_pair(a, c, b);
    link_pair(b, c, a);
    faces_.emplace_back(a, b, c);
    std::uint8_t mask = 0;
    const std::array<Vertex, 3> fv{a, b, c};
    const std::array<int, 3> st{sa, sb, sc};
    for (int k = 0; k < 3; ++k) {
      if (st[k] == 1) {
        closed_[fv[k]] = true;
        mask |= 1U << k;
      }
    }
    undo_.push_back({fv, mask, false});
    if (mask && prune_irreducible_ && !irreducible_so_far(fv, mask)) {
      remove_face();
      return false;
    }
    return true;
  }

  // Every newly closed vertex needs degree >= 4, and every edge between two
  // closed vertices needs a third common neighbor; both are final once closed.
  bool irreducible_so_far(const std::array<Vertex, 3>& fv, std::uint8_t mask) const {
    for (int k = 0; k < 3; ++k) {
      if (!(mask & (1U << k))) continue;
      const Vertex x = fv[k];
      if (degree_[x] < 4) return false;
      for (std::uint32_t m = nbr_[x]; m; m &= m - 1) {
        const Vertex y = std::countr_zero(m);
        if (closed_[y] && std::popcount(nbr_[x] & nbr_[y]) < 3) return false;
      }
    }
    return true;
  }

  void remove_face() {
    const Undo u = undo_.back();
    undo_.pop_back();
    faces_.pop_back();
    for (int k = 0; k < 3; ++k)
      if (u.closed_mask & (1U << k)) closed_[u.face[k]] = false;
    const auto [a, b, c] = u.face;
    unlink_pair(b, c, a);
    unlink_pair(a, c, b);
    unlink_pair(a, b, c);
  }

  void extend(int depth) {
    if (depth == kSplitDepth && (split_counter_++ % jobs_) != worker_) return;

    Vertex v = -1;
    for (Vertex x = 0; x < n_; ++x) {
      if (used_[x] && !closed_[x]) {
        v = x;
        break;
      }
    }
    if (v < 0) {
      if (used_count_ == n_ && static_cast<int>(faces_.size()) == target_faces_) emit();
      return;
    }
    Vertex u = -1;
    for (Vertex x = 0; x < n_; ++x) {
      if (count_[v][x] == 1) {
        u = x;
        break;
      }
    }
    const Vertex z = third_[v][u][0];

    for (Vertex w = 0; w < n_; ++w) {
      if (w == v || w == u || w == z) continue;
      if (!used_[w]) {
        // All unused labels are interchangeable; only the lowest is tried.
        mark_used(w);
        if (add_face(v, u, w)) {
          extend(depth + 1);
          remove_face();
        }
        used_[w] = false;
        --used_count_;
        break;
      }
      if (closed_[w]) continue;
      if (add_face(v, u, w)) {
        extend(depth + 1);
        remove_face();
      }
    }
  }

  void emit() {
    Triangulation t = Triangulation::from_faces(n_, faces_);
    if (surface_of(t) != surface_) return;
    if (irreducible_only_ && !is_irreducible(t)) return;
    out_->insert(canonical_code(t));
  }

  int n_;
  SurfaceId surface_;
  int max_degree_;
  int target_faces_;
  int target_edges_;
  bool irreducible_only_;
  bool prune_irreducible_;
  int worker_;
  int jobs_;
  ClassSet* out_ = nullptr;

  std::array<std::array<std::uint8_t, kMaxN>, kMaxN> count_{};
  std::array<std::array<std::array<Vertex, 2>, kMaxN>, kMaxN> third_{};
  std::array<int, kMaxN> degree_{};
  std::array<std::uint32_t, kMaxN> nbr_{};
  std::array<bool, kMaxN> closed_{};
  std::array<bool, kMaxN> used_{};
  int used_count_ = 0;
  int edges_ = 0;
  std::vector<Face> faces_;
  std::vector<Undo> undo_;
  long long split_counter_ = 0;
};

ClassSet enumerate(const SurfaceId& surface, int n, bool irreducible_only, const GeneratorOptions& opts) {
  if (!supported(surface)) throw GeneratorError("unsupported surface: " + surface.name());
  if (n < 4 || n > vertex_limit(surface)) {
    throw GeneratorError("unsupported vertex count " + std::to_string(n) + " for " + surface.name());
  }
  const int edges = 3 * (n - surface.euler_characteristic);
  const int min_max_degree = (2 * edges + n - 1) / n;
  const int jobs = std::max(1, opts.jobs);

  std::mutex merge_mutex;
  ClassSet result;
  auto work = [&](int worker) {
    ClassSet local;
    for (int d = min_max_degree; d <= n - 1; ++d) {
      LinkSearch search(n, surface, d, irreducible_only, worker, jobs);
      search.run(local);
      if (opts.progress) {
        opts.progress("worker " + std::to_string(worker) + " finished max degree " + std::to_string(d) + ", " +
                      std::to_string(local.size()) + " classes so far");
      }
    }
    std::lock_guard lock(merge_mutex);
    result.merge(local);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  return result;
}

}  // namespace

int vertex_limit(const SurfaceId& surface) {
  if (surface == SurfaceId::sphere()) return 12;
  if (surface == SurfaceId::projective_plane()) return 10;
  if (surface == SurfaceId::klein_bottle()) return 11;
  return 0;
}

ClassSet enumerate_all(const SurfaceId& surface, int n, const GeneratorOptions& opts) {
  return enumerate(surface, n, false, opts);
}

ClassSet enumerate_irreducible(const SurfaceId& surface, int n, const GeneratorOptions& opts) {
  return enumerate(surface, n, true, opts);
}

ClassSet all_splits(const Triangulation& t) {
  ClassSet out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto link = link_cycle(t, v);
    for (std::size_t i = 0; i < link.size(); ++i)
      for (std::size_t j = i + 1; j < link.size(); ++j) out.insert(canonical_code(split(t, v, link[i], link[j])));
  }
  return out;
}

}  // namespace trisurf
