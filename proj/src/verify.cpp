#include "trisurf/verify.hpp"

#include <algorithm>

#include "trisurf/moves.hpp"
#include "trisurf/ps_enum.hpp"

namespace trisurf {

namespace {

std::string join(const std::vector<std::string>& parts, char sep = ',') {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out.empty() ? "-" : out;
}

std::vector<std::string> range_names(const char* prefix, int lo, int hi) {
  std::vector<std::string> out;
  for (int i = lo; i <= hi; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

class Recorder {
 public:
  Recorder(Report& r, const std::function<void(const Check&)>& cb) : report_(r), cb_(cb) {}

  void add(std::string name, bool pass, std::string detail) {
    report_.add(std::move(name), pass, std::move(detail));
    if (cb_) cb_(report_.checks.back());
  }

  // Runs one check body; an exception becomes a failure of that check only.
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("error: ") + e.what());
    }
  }

 private:
  Report& report_;
  const std::function<void(const Check&)>& cb_;
};

void count_check(Recorder& rec, const Catalog& catalog, int n, const ClassSet& codes,
                 const std::vector<std::string>& expected) {
  const CodeMatch m = match_catalog(codes, catalog);
  std::vector<std::string> got = m.names, want = expected;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  rec.add("irreducible n=" + std::to_string(n), got == want && m.unmatched == 0 && codes.size() == expected.size(),
          "count=" + std::to_string(codes.size()) + " matched=" + join(m.names) +
              " unmatched=" + std::to_string(m.unmatched));
}

}  // namespace

CodeMatch match_catalog(const ClassSet& codes, const Catalog& catalog) {
  CodeMatch m;
  std::set<CanonicalCode> seen;
  for (const CatalogEntry* e : catalog.all()) {
    const CanonicalCode c = canonical_code(e->triangulation);
    if (codes.count(c)) {
      m.names.push_back(e->name);
      seen.insert(c);
    }
  }
  m.unmatched = static_cast<int>(codes.size() - seen.size());
  return m;
}

Report verify_classification(const Catalog& catalog, VerifyLevel level, const GeneratorOptions& opts,
                    const std::function<void(const Check&)>& on_check) {
  Report report;
  Recorder rec(report, on_check);

  for (const Check& c : verify_catalog(catalog).checks) rec.add(c.name, c.pass, c.detail);

  rec.guarded("published colorings", [&] {
    const auto rows = ps::classify_published(catalog);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& [coloring, outcome] = rows[i];
      const std::string want(ps::published_colorings()[i].expected);
      rec.add("coloring " + coloring.to_string(), outcome.to_string() == want,
              "outcome=" + outcome.to_string() + " expected=" + want);
    }
  });

  rec.guarded("ps1.2 orbits", [&] {
    const auto orbits = ps::orbits();
    const double burnside = ps::burnside_orbit_count();
    std::set<ps::Permutation> listed(ps::listed_group().begin(), ps::listed_group().end());
    const bool closed = ps::generated_group({listed.begin(), listed.end()}) == listed;
    const bool generated =
        ps::generated_group({ps::half_turn_permutation(), ps::double_shift_permutation()}) == listed;
    rec.add("ps1.2 orbits", orbits.size() == 16 && burnside == 16.0 && closed && generated,
            "orbits=" + std::to_string(orbits.size()) + " burnside=" + std::to_string(static_cast<int>(burnside)) +
                " group-closed=" + (closed ? "yes" : "no") + " drawn-symmetries-generate=" + (generated ? "yes" : "no"));
  });

  rec.guarded("ps1.1 completion", [&] {
    ClassSet codes;
    for (const Triangulation& t : ps::complete_ps11())
      if (is_irreducible(t)) codes.insert(canonical_code(t));
    const CodeMatch m = match_catalog(codes, catalog);
    rec.add("ps1.1 completion", codes.size() == 2 && m.names == std::vector<std::string>{"Kh14", "Kh15"},
            "classes=" + std::to_string(codes.size()) + " matched=" + join(m.names));
  });

  rec.guarded("projective irreducible n<=7", [&] {
    ClassSet codes;
    for (const Triangulation& t : projective_irreducibles()) codes.insert(canonical_code(t));
    const CodeMatch m = match_catalog(codes, catalog);
    rec.add("projective irreducible n<=7", codes.size() == 2 && m.names == std::vector<std::string>{"MP1", "MP2"},
            "count=" + std::to_string(codes.size()) + " matched=" + join(m.names));
  });

  rec.guarded("crosscap rederivation", [&] {
    const auto classes =
        enumerate_crosscap_irreducibles(catalog.get("MP1").triangulation, catalog.get("MP2").triangulation);
    ClassSet codes;
    for (const CrosscapClass& c : classes) codes.insert(c.code);
    const CodeMatch m = match_catalog(codes, catalog);
    rec.add("crosscap rederivation", m.names == range_names("Kc", 1, 4) && m.unmatched == 0,
            "classes=" + std::to_string(codes.size()) + " matched=" + join(m.names));
  });

  ClassSet irreducible8, irreducible9;
  rec.guarded("irreducible n=8", [&] {
    irreducible8 = enumerate_irreducible(SurfaceId::klein_bottle(), 8, opts);
    count_check(rec, catalog, 8, irreducible8, range_names("Kh", 1, 6));
  });
  rec.guarded("irreducible n=9", [&] {
    irreducible9 = enumerate_irreducible(SurfaceId::klein_bottle(), 9, opts);
    std::vector<std::string> want = range_names("Kh", 7, 24);
    want.push_back("Kc1");
    count_check(rec, catalog, 9, irreducible9, want);
  });

  rec.guarded("closure n=8->9", [&] {
    const ClassSet all8 = enumerate_all(SurfaceId::klein_bottle(), 8, opts);
    const ClassSet all9 = enumerate_all(SurfaceId::klein_bottle(), 9, opts);
    ClassSet rebuilt;
    for (const CanonicalCode& c : all8) {
      const ClassSet s = all_splits(from_code(c));
      rebuilt.insert(s.begin(), s.end());
    }
    const std::size_t from_splits = rebuilt.size();
    rebuilt.insert(irreducible9.begin(), irreducible9.end());
    rec.add("closure n=8->9", rebuilt == all9,
            "all8=" + std::to_string(all8.size()) + " all9=" + std::to_string(all9.size()) +
                " splits=" + std::to_string(from_splits) + " irreducible9=" + std::to_string(irreducible9.size()));
  });

  if (level == VerifyLevel::Full) {
    std::size_t total = irreducible8.size() + irreducible9.size();
    rec.guarded("irreducible n=10", [&] {
      const ClassSet codes = enumerate_irreducible(SurfaceId::klein_bottle(), 10, opts);
      total += codes.size();
      count_check(rec, catalog, 10, codes, {"Kh25", "Kc2"});
    });
    rec.guarded("irreducible n=11", [&] {
      const ClassSet codes = enumerate_irreducible(SurfaceId::klein_bottle(), 11, opts);
      total += codes.size();
      count_check(rec, catalog, 11, codes, {"Kc3", "Kc4"});
    });
    rec.add("irreducible total", total == 29, "count=" + std::to_string(total));
  }
  return report;
}

}  // namespace trisurf
