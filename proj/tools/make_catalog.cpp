// Writes the catalog's .tri files: Kh*/Kc* from the transcribed drawings,
// MP1/MP2 from projective-plane enumeration.
#include <filesystem>
#include <iostream>

#include "trisurf/catalog.hpp"
#include "trisurf/tri_io.hpp"

using namespace trisurf;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalog <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  for (const Figure& f : figures()) {
    const Triangulation t = build_figure(f);
    const std::string kind = kind_of(f.name) == EntryKind::Handle ? "handle type" : "crosscap type";
    write_tri_file(dir / (f.name + ".tri"), t,
                   f.name + ": Klein bottle, " + kind + ", degrees " + degree_sequence(t).to_string());
  }

  const auto mp = projective_irreducibles();
  if (mp.size() != 2) {
    std::cerr << "expected 2 irreducible projective-plane classes, found " << mp.size() << "\n";
    return 1;
  }
  for (std::size_t i = 0; i < mp.size(); ++i) {
    const std::string name = "MP" + std::to_string(i + 1);
    write_tri_file(dir / (name + ".tri"), mp[i],
                   name + ": projective plane, irreducible, degrees " + degree_sequence(mp[i]).to_string());
  }
  std::cout << "wrote " << figures().size() + mp.size() << " files to " << dir.string() << "\n";
  return 0;
}
