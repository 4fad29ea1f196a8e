// Command-line front end. Exit status: 0 success, 1 a check or validation
// failed, 2 bad usage or unreadable input.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <mutex>

#include "trisurf/catalog.hpp"
#include "trisurf/generator.hpp"
#include "trisurf/isomorphism.hpp"
#include "trisurf/moves.hpp"
#include "trisurf/ps_enum.hpp"
#include "trisurf/tri_io.hpp"
#include "trisurf/verify.hpp"

using namespace trisurf;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Triangulation load(const std::string& path) {
  if (path == "-") return read_tri(std::cin);
  return read_tri_file(path);
}

void emit(const Triangulation& t, const std::string& out, const std::string& comment) {
  if (out.empty() || out == "-")
    write_tri(std::cout, t, comment);
  else
    write_tri_file(out, t, comment);
}

SurfaceId parse_surface(const std::string& s) {
  if (s == "sphere") return SurfaceId::sphere();
  if (s == "projective") return SurfaceId::projective_plane();
  if (s == "klein") return SurfaceId::klein_bottle();
  throw Usage("unknown surface: " + s);
}

void print_check(const Check& c, bool json) {
  if (json) {
    std::cout << nlohmann::json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}}.dump() << std::endl;
  } else {
    std::cout << "CHECK " << c.name << (c.pass ? " PASS " : " FAIL ") << c.detail << std::endl;
  }
}

GeneratorOptions generator_options(int jobs, bool quiet) {
  GeneratorOptions opts;
  opts.jobs = jobs;
  if (!quiet) {
    opts.progress = [](const std::string& line) {
      static std::mutex m;
      std::lock_guard lock(m);
      std::cerr << "progress: " << line << "\n";
    };
  }
  return opts;
}

int cmd_check(const std::string& path) {
  Triangulation t = [&] {
    try {
      return load(path);
    } catch (const ValidationError& e) {
      std::cout << "invalid " << to_string(e.rejection().kind) << ": " << e.rejection().detail << "\n";
      throw;
    }
  }();
  const SurfaceId s = surface_of(t);
  std::cout << "valid n=" << t.vertex_count() << " edges=" << t.edge_count() << " faces=" << t.face_count()
            << " surface=\"" << s.name() << "\" euler=" << s.euler_characteristic
            << " orientable=" << (s.orientable ? "yes" : "no") << " contractible=" << contractible_edges(t).size()
            << " irreducible=" << (is_irreducible(t) ? "yes" : "no") << " degrees=" << degree_sequence(t).to_string()
            << "\n";
  return 0;
}

std::string describe(const Triangulation& t) {
  const SurfaceId s = surface_of(t);
  return s.name() + ", " + std::to_string(t.vertex_count()) + " vertices, degrees " + degree_sequence(t).to_string();
}

int cmd_catalog_list(const Catalog& catalog) {
  for (const auto& [name, why] : catalog.load_errors()) std::cout << name << " load-error " << why << "\n";
  for (const CatalogEntry* e : catalog.all())
    std::cout << e->name << " " << to_string(e->kind) << " n=" << e->triangulation.vertex_count() << " "
              << degree_sequence(e->triangulation).to_string() << "\n";
  return catalog.load_errors().empty() ? 0 : 1;
}

void print_outcome(ps::Coloring c, const Catalog& catalog) {
  std::cout << c.to_string() << " → " << ps::classify(ps::coloring_to_triangulation(c), catalog).to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of closed surfaces: contraction, equivalence, generation and the Klein bottle catalog"};
  app.require_subcommand(1);

  std::string file, out;
  int va = 0, vb = 0, vc = 0;

  auto* check = app.add_subcommand("check", "validate a .tri file and describe it");
  check->add_option("file", file, "input (.tri, or - for stdin)")->required();

  auto* canon = app.add_subcommand("canon", "print the canonical code");
  canon->add_option("file", file, "input (.tri, or - for stdin)")->required();

  auto* contract_cmd = app.add_subcommand("contract", "contract edge a-b");
  contract_cmd->add_option("file", file)->required();
  contract_cmd->add_option("a", va)->required();
  contract_cmd->add_option("b", vb)->required();
  contract_cmd->add_option("-o,--out", out, "output .tri (default stdout)");

  auto* split_cmd = app.add_subcommand("split", "split vertex v along the link path b..d");
  split_cmd->add_option("file", file)->required();
  split_cmd->add_option("v", va)->required();
  split_cmd->add_option("b", vb)->required();
  split_cmd->add_option("d", vc)->required();
  split_cmd->add_option("-o,--out", out, "output .tri (default stdout)");

  auto* catalog_cmd = app.add_subcommand("catalog", "named triangulations");
  catalog_cmd->require_subcommand(1);
  auto* cat_list = catalog_cmd->add_subcommand("list", "names, kinds and degree sequences");
  std::string entry;
  auto* cat_show = catalog_cmd->add_subcommand("show", "print an entry as .tri");
  cat_show->add_option("name", entry)->required();
  auto* cat_verify = catalog_cmd->add_subcommand("verify", "check every entry");
  bool json = false;
  cat_verify->add_flag("--json", json, "one JSON object per line");

  auto* ps1 = app.add_subcommand("ps1", "colorings of the partial structure PS1.2");
  ps1->require_subcommand(1);
  auto* ps1_table = ps1->add_subcommand("table", "the sixteen published colorings");
  auto* ps1_all = ps1->add_subcommand("all", "all 64 colorings");

  std::string surface;
  int n = 0, jobs = 1;
  bool irreducible_only = false, quiet = false;
  auto* enumerate = app.add_subcommand("enumerate", "all triangulations of a surface on n vertices");
  enumerate->add_option("--surface", surface)->required()->check(CLI::IsMember({"sphere", "projective", "klein"}));
  enumerate->add_option("--n", n)->required()->check(CLI::Range(4, Triangulation::kMaxVertices));
  enumerate->add_flag("--irreducible-only", irreducible_only);
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  enumerate->add_option("--out", out, "directory for one .tri file per class");
  enumerate->add_flag("-q,--quiet", quiet, "no progress on stderr");

  std::string level = "fast";
  auto* verify = app.add_subcommand("verify-paper", "run every classification check");
  verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "one JSON object per line");
  verify->add_flag("-q,--quiet", quiet, "no progress on stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file);

    if (canon->parsed()) {
      std::cout << canonical_code(load(file)).to_string() << "\n";
      return 0;
    }

    if (contract_cmd->parsed()) {
      const Triangulation t = contract(load(file), Edge(va, vb));
      emit(t, out, "contracted " + std::to_string(va) + "-" + std::to_string(vb) + ": " + describe(t));
      return 0;
    }

    if (split_cmd->parsed()) {
      const Triangulation t = split(load(file), va, vb, vc);
      emit(t, out, "split " + std::to_string(va) + " at " + std::to_string(vb) + "," + std::to_string(vc) + ": " +
                       describe(t));
      return 0;
    }

    if (catalog_cmd->parsed()) {
      const Catalog catalog = Catalog::load();
      if (cat_list->parsed()) return cmd_catalog_list(catalog);
      if (cat_show->parsed()) {
        const CatalogEntry& e = catalog.get(entry);
        write_tri(std::cout, e.triangulation, e.name + ": " + describe(e.triangulation));
        return 0;
      }
      if (cat_verify->parsed()) {
        const Report r = verify_catalog(catalog);
        for (const Check& c : r.checks) print_check(c, json);
        return r.all_pass() ? 0 : 1;
      }
    }

    if (ps1->parsed()) {
      const Catalog catalog = Catalog::load();
      if (ps1_table->parsed())
        for (const ps::PublishedColoring& row : ps::published_colorings()) print_outcome(ps::Coloring::parse(row.coloring), catalog);
      if (ps1_all->parsed())
        for (int bits = 0; bits < 64; ++bits) {
          // Printed in string order, A first.
          ps::Coloring c;
          for (int i = 0; i < 6; ++i)
            if (bits & (32 >> i)) c.bits |= 1U << i;
          print_outcome(c, catalog);
        }
      return 0;
    }

    if (enumerate->parsed()) {
      const SurfaceId s = parse_surface(surface);
      const GeneratorOptions opts = generator_options(jobs, quiet);
      const ClassSet codes = irreducible_only ? enumerate_irreducible(s, n, opts) : enumerate_all(s, n, opts);
      int irreducible = 0, index = 0;
      if (!out.empty()) std::filesystem::create_directories(out);
      for (const CanonicalCode& c : codes) {
        const Triangulation t = from_code(c);
        irreducible += is_irreducible(t);
        if (!out.empty()) {
          const std::string name = surface + "_n" + std::to_string(n) + "_" + std::to_string(++index) + ".tri";
          write_tri_file(std::filesystem::path(out) / name, t, describe(t));
        }
      }
      std::cout << "surface=" << surface << " n=" << n << " classes=" << codes.size() << " irreducible=" << irreducible
                << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const Catalog catalog = Catalog::load();
      const Report r = verify_classification(catalog, level == "full" ? VerifyLevel::Full : VerifyLevel::Fast,
                                    generator_options(jobs, quiet), [&](const Check& c) { print_check(c, json); });
      return r.all_pass() ? 0 : 1;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const MoveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GeneratorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
