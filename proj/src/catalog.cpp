#include "trisurf/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "trisurf/moves.hpp"
#include "trisurf/tri_io.hpp"

namespace trisurf {

std::string_view to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Handle: return "handle";
    case EntryKind::Crosscap: return "crosscap";
    case EntryKind::ProjectivePlane: return "projective-plane";
  }
  return "unknown";
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

const std::vector<std::string>& entry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (int i = 1; i <= 25; ++i) out.push_back("Kh" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) out.push_back("Kc" + std::to_string(i));
    out.push_back("MP1");
    out.push_back("MP2");
    return out;
  }();
  return names;
}

EntryKind kind_of(std::string_view name) {
  const auto& names = entry_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::out_of_range("unknown catalog entry: " + std::string(name));
  if (name.starts_with("Kh")) return EntryKind::Handle;
  if (name.starts_with("Kc")) return EntryKind::Crosscap;
  if (name.starts_with("MP")) return EntryKind::ProjectivePlane;
  throw std::out_of_range("unknown catalog entry: " + std::string(name));
}

DegreeSequence expected_degree_sequence(std::string_view name) {
  // Kh11 is the drawn sequence; the printed (8,8,6,6,6,5,5,5,4) has odd sum.
  static const std::map<std::string, std::vector<int>, std::less<>> table = {
      {"Kh1", {7, 7, 6, 6, 6, 6, 5, 5}},
      {"Kh2", {7, 7, 7, 6, 6, 5, 5, 5}},
      {"Kh3", {7, 7, 7, 7, 5, 5, 5, 5}},
      {"Kh4", {7, 6, 6, 6, 6, 6, 6, 5}},
      {"Kh5", {7, 7, 7, 6, 6, 5, 5, 5}},
      {"Kh6", {7, 7, 7, 6, 6, 6, 5, 4}},
      {"Kh7", {8, 8, 8, 6, 6, 5, 5, 4, 4}},
      {"Kh8", {8, 8, 7, 7, 6, 5, 5, 4, 4}},
      {"Kh9", {8, 8, 7, 7, 6, 6, 4, 4, 4}},
      {"Kh10", {8, 7, 7, 6, 6, 5, 5, 5, 5}},
      {"Kh11", {8, 8, 6, 6, 6, 6, 5, 5, 4}},
      {"Kh12", {8, 8, 8, 6, 6, 5, 5, 4, 4}},
      {"Kh13", {8, 8, 7, 7, 7, 5, 4, 4, 4}},
      {"Kh14", {6, 6, 6, 6, 6, 6, 6, 6, 6}},
      {"Kh15", {8, 7, 7, 6, 6, 6, 5, 5, 4}},
      {"Kh16", {8, 8, 8, 6, 6, 6, 4, 4, 4}},
      {"Kh17", {8, 7, 7, 7, 7, 6, 4, 4, 4}},
      {"Kh18", {8, 8, 7, 7, 6, 5, 5, 4, 4}},
      {"Kh19", {8, 8, 7, 6, 6, 6, 5, 4, 4}},
      {"Kh20", {8, 8, 8, 6, 5, 5, 5, 5, 4}},
      {"Kh21", {8, 7, 7, 7, 6, 5, 5, 5, 4}},
      {"Kh22", {8, 7, 7, 6, 6, 5, 5, 5, 5}},
      {"Kh23", {7, 7, 7, 6, 6, 6, 5, 5, 5}},
      {"Kh24", {8, 7, 7, 6, 6, 6, 5, 5, 4}},
      {"Kh25", {9, 9, 7, 7, 6, 6, 4, 4, 4, 4}},
      {"Kc1", {8, 8, 8, 5, 5, 5, 5, 5, 5}},
      {"Kc2", {9, 9, 7, 6, 6, 5, 5, 5, 4, 4}},
      {"Kc3", {10, 10, 6, 6, 6, 6, 6, 4, 4, 4, 4}},
      {"Kc4", {10, 8, 8, 6, 6, 6, 6, 4, 4, 4, 4}},
      {"MP1", {5, 5, 5, 5, 5, 5}},
      {"MP2", {6, 6, 6, 6, 4, 4, 4}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("unknown catalog entry: " + std::string(name));
  return {it->second};
}

const Figure& figure(std::string_view name) {
  for (const Figure& f : figures())
    if (f.name == name) return f;
  throw std::out_of_range("no figure named " + std::string(name));
}

std::vector<std::pair<Point, Point>> crosscap_glue() {
  return {
      {{-20, -5}, {0, 5}}, {{-10, -10}, {-10, 10}}, {{0, -5}, {-20, 5}},  // left hexagon
      {{0, -5}, {20, 5}},  {{10, -10}, {10, 10}},   {{20, -5}, {0, 5}},   // right hexagon
  };
}

Triangulation build_figure(const Figure& f) {
  if (kind_of(f.name) == EntryKind::Handle) return build_from_grid({f.points, f.segments});
  return build_from_drawing({f.points, f.segments, crosscap_glue()});
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TRI_DATA_DIR"); env && *env) return env;
  return TRISURF_DEFAULT_DATA_DIR;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog c;
  for (const std::string& name : entry_names()) {
    try {
      c.entries_.push_back({name, kind_of(name), read_tri_file(dir / (name + ".tri")), expected_degree_sequence(name)});
    } catch (const std::exception& e) {
      c.errors_.emplace_back(name, e.what());
    }
  }
  return c;
}

const CatalogEntry& Catalog::get(std::string_view name) const {
  for (const CatalogEntry& e : entries_)
    if (e.name == name) return e;
  for (const auto& [n, why] : errors_)
    if (n == name) throw std::runtime_error(n + " failed to load: " + why);
  throw std::out_of_range("unknown catalog entry: " + std::string(name));
}

std::vector<const CatalogEntry*> Catalog::all() const {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : entries_) out.push_back(&e);
  return out;
}

std::vector<const CatalogEntry*> Catalog::klein_entries() const {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : entries_)
    if (e.kind != EntryKind::ProjectivePlane) out.push_back(&e);
  return out;
}

Report verify_catalog(const Catalog& catalog) {
  Report r;
  for (const auto& [name, why] : catalog.load_errors()) r.add("catalog " + name, false, "load failed: " + why);

  for (const CatalogEntry* e : catalog.all()) {
    const Triangulation& t = e->triangulation;
    const SurfaceId want = e->kind == EntryKind::ProjectivePlane ? SurfaceId::projective_plane()
                                                                 : SurfaceId::klein_bottle();
    const SurfaceId got = surface_of(t);
    const DegreeSequence ds = degree_sequence(t);
    const bool irreducible = is_irreducible(t);
    std::string detail = "surface=" + std::to_string(got.euler_characteristic) +
                         (got.orientable ? "/orientable" : "/non-orientable") +
                         " irreducible=" + (irreducible ? "yes" : "no") + " degrees=" + ds.to_string();
    const bool ok = got == want && irreducible && ds == e->expected_degree_sequence;
    if (ds != e->expected_degree_sequence) detail += " expected=" + e->expected_degree_sequence.to_string();
    r.add("catalog " + e->name, ok, detail);
  }

  const auto klein = catalog.klein_entries();
  const auto handles = std::count_if(klein.begin(), klein.end(), [](auto* e) { return e->kind == EntryKind::Handle; });
  r.add("catalog count", klein.size() == 29 && handles == 25,
        "klein=" + std::to_string(klein.size()) + " handle=" + std::to_string(handles) +
            " crosscap=" + std::to_string(klein.size() - handles));

  std::vector<CanonicalCode> codes;
  for (const CatalogEntry* e : klein) codes.push_back(canonical_code(e->triangulation));
  int pairs = 0, clashes = 0;
  std::string clash_names;
  for (std::size_t i = 0; i < klein.size(); ++i) {
    for (std::size_t j = i + 1; j < klein.size(); ++j) {
      ++pairs;
      if (codes[i] == codes[j]) {
        ++clashes;
        clash_names += " " + klein[i]->name + "=" + klein[j]->name;
      }
    }
  }
  r.add("catalog pairwise-nonequivalent", clashes == 0 && pairs == 406,
        "pairs=" + std::to_string(pairs) + " equivalent=" + std::to_string(clashes) + clash_names);

  auto unique_sequence = [&](const std::string& name) {
    int hits = 0;
    DegreeSequence target;
    for (const CatalogEntry* e : klein)
      if (e->name == name) target = degree_sequence(e->triangulation);
    for (const CatalogEntry* e : klein) hits += degree_sequence(e->triangulation) == target;
    r.add("distinguisher " + name + "-degree-sequence-unique", hits == 1 && !target.degrees.empty(),
          "occurrences=" + std::to_string(hits));
  };
  unique_sequence("Kh23");
  unique_sequence("Kh25");

  auto adjacency = [&](const std::string& yes, const std::string& no, int degree) {
    try {
      const Triangulation& a = catalog.get(yes).triangulation;
      const Triangulation& b = catalog.get(no).triangulation;
      const auto ya = degree_pair_adjacent(a, degree), nb = degree_pair_adjacent(b, degree);
      const bool ok = degree_sequence(a) == degree_sequence(b) && ya == true && nb == false && !graph_isomorphic(a, b);
      r.add("distinguisher " + yes + "-vs-" + no, ok,
            "degree-" + std::to_string(degree) + " pair adjacent in " + yes + "=" +
                (ya ? (*ya ? "yes" : "no") : "n/a") + ", in " + no + "=" + (nb ? (*nb ? "yes" : "no") : "n/a"));
    } catch (const std::exception& e) {
      r.add("distinguisher " + yes + "-vs-" + no, false, e.what());
    }
  };
  adjacency("Kh10", "Kh22", 6);
  adjacency("Kh15", "Kh24", 5);

  try {
    const Triangulation& mp1 = catalog.get("MP1").triangulation;
    const int n = mp1.vertex_count();
    r.add("catalog MP1-complete", n == 6 && mp1.edge_count() == n * (n - 1) / 2,
          "n=" + std::to_string(n) + " edges=" + std::to_string(mp1.edge_count()));
  } catch (const std::exception& e) {
    r.add("catalog MP1-complete", false, e.what());
  }
  return r;
}

std::array<int, 3> gluing_permutation(int gluing) {
  if (gluing < 0 || gluing > 5) throw std::out_of_range("gluing must be in 0..5");
  std::array<int, 3> p{0, 1, 2};
  for (int i = 0; i < gluing; ++i) std::next_permutation(p.begin(), p.end());
  return p;
}

Triangulation crosscap_sum(const Triangulation& t1, const Face& f1, const Triangulation& t2, const Face& f2,
                           int gluing) {
  const auto perm = gluing_permutation(gluing);
  const int n1 = t1.vertex_count();
  std::vector<Vertex> map(t2.vertex_count(), -1);
  for (int k = 0; k < 3; ++k) map[f2.v[perm[k]]] = f1.v[k];
  int next = n1;
  for (Vertex x = 0; x < t2.vertex_count(); ++x)
    if (map[x] < 0) map[x] = next++;

  std::vector<Face> faces;
  bool saw1 = false, saw2 = false;
  for (const Face& f : t1.faces()) {
    if (f == f1) {
      saw1 = true;
      continue;
    }
    faces.push_back(f);
  }
  for (const Face& f : t2.faces()) {
    if (f == f2) {
      saw2 = true;
      continue;
    }
    faces.emplace_back(map[f.v[0]], map[f.v[1]], map[f.v[2]]);
  }
  if (!saw1 || !saw2) throw std::invalid_argument("crosscap_sum: face is not a face of its triangulation");
  return Triangulation::from_faces(next, std::move(faces));
}

std::vector<CrosscapClass> enumerate_crosscap_irreducibles(const Triangulation& mp1, const Triangulation& mp2) {
  const std::array<std::pair<const char*, const Triangulation*>, 2> parts{{{"MP1", &mp1}, {"MP2", &mp2}}};
  std::map<CanonicalCode, CrosscapClass> found;
  for (const auto& [ln, lt] : parts) {
    for (const auto& [rn, rt] : parts) {
      for (const Face& f1 : lt->faces()) {
        for (const Face& f2 : rt->faces()) {
          for (int g = 0; g < 6; ++g) {
            std::optional<Triangulation> sum;
            try {
              sum = crosscap_sum(*lt, f1, *rt, f2, g);
            } catch (const ValidationError&) {
              continue;
            }
            if (!is_irreducible(*sum)) continue;
            CanonicalCode code = canonical_code(*sum);
            if (found.count(code)) continue;
            found.emplace(code, CrosscapClass{code, *sum, ln, rn, f1, f2, g});
          }
        }
      }
    }
  }
  std::vector<CrosscapClass> out;
  for (auto& [code, cls] : found) out.push_back(std::move(cls));
  return out;
}

std::vector<Triangulation> projective_irreducibles() {
  std::vector<Triangulation> out;
  for (int n = 4; n <= 7; ++n)
    for (const CanonicalCode& c : enumerate_irreducible(SurfaceId::projective_plane(), n)) out.push_back(from_code(c));
  return out;
}

}  // namespace trisurf
