#include "trisurf/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>


namespace trisurf {

std::string CanonicalCode::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(code[i]);
  }
  return s;
}

CanonicalCode CanonicalCode::parse(const std::string& text) {
  CanonicalCode c;
  std::istringstream in(text);
  int x;
  while (in >> x) {
    if (x < 0 || x > 255) throw std::invalid_argument("code value out of range");
    c.code.push_back(static_cast<std::uint8_t>(x));
  }
  if (!in.eof()) throw std::invalid_argument("malformed canonical code");
  return c;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint8_t b : c.code) h = (h ^ b) * 1099511628211ULL;
  return h;
}

namespace {

// Directed-edge lookup: the two vertices opposite edge xy and their face indices.
struct EdgeTable {
  int n;
  std::vector<std::array<Vertex, 2>> third;
  std::vector<std::array<int, 2>> face;

  explicit EdgeTable(const Triangulation& t)
      : n(t.vertex_count()), third(n * n, {-1, -1}), face(n * n, {-1, -1}) {
    const auto faces = t.faces();
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
      const auto& v = faces[i].v;
      for (int k = 0; k < 3; ++k) {
        const Vertex x = v[k], y = v[(k + 1) % 3], z = v[(k + 2) % 3];
        add(x, y, z, i);
        add(y, x, z, i);
      }
    }
  }

  void add(Vertex x, Vertex y, Vertex z, int f) {
    auto& th = third[x * n + y];
    auto& fa = face[x * n + y];
    const int slot = th[0] < 0 ? 0 : 1;
    th[slot] = z;
    fa[slot] = f;
  }
};

class CodeBuilder {
 public:
  explicit CodeBuilder(const Triangulation& t)
      : t_(t), table_(t), label_(t.vertex_count()), seen_(t.face_count()) {}

  // Runs the traversal from flag (x,y,z). Returns false as soon as the code
  // would exceed `best`; on success `out` holds the code and it is <= best.
  bool run(Vertex x, Vertex y, Vertex z, const std::vector<std::uint8_t>* best, std::vector<std::uint8_t>& out) {
    const int n = t_.vertex_count();
    std::fill(label_.begin(), label_.end(), -1);
    std::fill(seen_.begin(), seen_.end(), 0);
    out.clear();
    bool below = best == nullptr;
    auto emit = [&](int value) {
      if (!below) {
        const auto pos = out.size();
        const int b = (*best)[pos];
        if (value > b) return false;
        if (value < b) below = true;
      }
      out.push_back(static_cast<std::uint8_t>(value));
      return true;
    };

    int next = 0;
    label_[x] = next++;
    label_[y] = next++;
    label_[z] = next++;
    if (!emit(n)) return false;
    queue_.clear();
    queue_.push_back({x, y, z});
    seen_[face_of(x, y, z)] = 1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto flag = queue_[head];
      for (int k = 0; k < 3; ++k) {
        const Vertex p = flag[k], q = flag[(k + 1) % 3], r = flag[(k + 2) % 3];
        const auto& th = table_.third[p * n + q];
        const int slot = th[0] == r ? 1 : 0;
        const Vertex w = th[slot];
        if (label_[w] < 0) label_[w] = next++;
        if (!emit(label_[w])) return false;
        const int f = table_.face[p * n + q][slot];
        if (!seen_[f]) {
          seen_[f] = 1;
          queue_.push_back({q, p, w});
        }
      }
    }
    return true;
  }

  const std::vector<int>& labels() const { return label_; }

 private:
  int face_of(Vertex x, Vertex y, Vertex z) const {
    const auto& th = table_.third[x * t_.vertex_count() + y];
    return table_.face[x * t_.vertex_count() + y][th[0] == z ? 0 : 1];
  }

  const Triangulation& t_;
  EdgeTable table_;
  std::vector<int> label_;
  std::vector<char> seen_;
  std::vector<std::array<Vertex, 3>> queue_;
};

// Start flags restricted to those with the lexicographically largest degree
// triple; the restriction is itself relabeling-invariant.
std::vector<std::array<Vertex, 3>> start_flags(const Triangulation& t) {
  std::vector<std::array<Vertex, 3>> flags;
  std::array<int, 3> best{-1, -1, -1};
  for (const Face& f : t.faces()) {
    std::array<Vertex, 3> p = f.v;
    std::sort(p.begin(), p.end());
    do {
      const std::array<int, 3> key{t.degree(p[0]), t.degree(p[1]), t.degree(p[2])};
      if (key > best) {
        best = key;
        flags.clear();
      }
      if (key == best) flags.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return flags;
}

}  // namespace

CanonicalCode canonical_code(const Triangulation& t) {
  CodeBuilder builder(t);
  std::vector<std::uint8_t> best, cur;
  bool have = false;
  for (const auto& f : start_flags(t)) {
    if (builder.run(f[0], f[1], f[2], have ? &best : nullptr, cur)) {
      best.swap(cur);
      have = true;
    }
  }
  return CanonicalCode{std::move(best)};
}

Triangulation from_code(const CanonicalCode& c) {
  if (c.code.empty()) throw std::invalid_argument("empty canonical code");
  const int n = c.code[0];
  std::set<Face> faces;
  std::vector<std::array<Vertex, 3>> queue{{0, 1, 2}};
  faces.insert(Face(0, 1, 2));
  std::size_t pos = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto flag = queue[head];
    for (int k = 0; k < 3; ++k) {
      if (pos >= c.code.size()) throw std::invalid_argument("truncated canonical code");
      const Vertex p = flag[k], q = flag[(k + 1) % 3];
      const Vertex w = c.code[pos++];
      if (w == p || w == q) throw std::invalid_argument("malformed canonical code");
      if (faces.insert(Face(p, q, w)).second) queue.push_back({q, p, w});
    }
  }
  if (pos != c.code.size()) throw std::invalid_argument("trailing data in canonical code");
  return Triangulation::from_faces(n, std::vector<Face>(faces.begin(), faces.end()));
}

Triangulation canonical_form(const Triangulation& t) { return from_code(canonical_code(t)); }

bool equivalent(const Triangulation& t1, const Triangulation& t2) {
  if (t1.vertex_count() != t2.vertex_count() || t1.face_count() != t2.face_count()) return false;
  if (degree_sequence(t1) != degree_sequence(t2)) return false;
  return canonical_code(t1) == canonical_code(t2);
}

bool graph_isomorphic(const Triangulation& t1, const Triangulation& t2) {
  const int n = t1.vertex_count();
  if (n != t2.vertex_count() || t1.edge_count() != t2.edge_count()) return false;
  if (degree_sequence(t1) != degree_sequence(t2)) return false;

  // Breadth-first order from a max-degree vertex so each new vertex is
  // constrained by already-mapped neighbors.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  Vertex root = 0;
  for (Vertex v = 1; v < n; ++v)
    if (t1.degree(v) > t1.degree(root)) root = v;
  order.push_back(root);
  placed[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t1.neighbors(order[i])) {
      if (!placed[w]) {
        placed[w] = true;
        order.push_back(w);
      }
    }
  }

  std::vector<Vertex> image(n, -1);
  std::vector<bool> taken(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const Vertex u = order[i];
    for (Vertex v = 0; v < n; ++v) {
      if (taken[v] || t2.degree(v) != t1.degree(u)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex w = order[j];
        ok = t1.adjacent(u, w) == t2.adjacent(v, image[w]);
      }
      if (!ok) continue;
      image[u] = v;
      taken[v] = true;
      if (self(self, i + 1)) return true;
      taken[v] = false;
      image[u] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

std::optional<bool> degree_pair_adjacent(const Triangulation& t, int degree) {
  std::vector<Vertex> hits;
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) == degree) hits.push_back(v);
  if (hits.size() != 2) return std::nullopt;
  return t.adjacent(hits[0], hits[1]);
}

}  // namespace trisurf
