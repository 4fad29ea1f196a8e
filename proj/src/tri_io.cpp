#include "trisurf/tri_io.hpp"

#include <fstream>
#include <sstream>

namespace trisurf {

Triangulation read_tri(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Face> faces;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [&](const std::string& what) {
      return FormatError("line " + std::to_string(lineno) + ": " + what);
    };
    if (tag == "n") {
      if (n >= 0) throw fail("repeated vertex count");
      if (!(ls >> n) || n < 0) throw fail("bad vertex count");
    } else if (tag == "f") {
      if (n < 0) throw fail("face before vertex count");
      int a, b, c;
      if (!(ls >> a >> b >> c)) throw fail("face needs three labels");
      faces.emplace_back(a, b, c);
    } else {
      throw fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing text");
  }
  if (n < 0) throw FormatError("missing vertex count");
  return Triangulation::from_faces(n, std::move(faces));
}

Triangulation read_tri_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return read_tri(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Triangulation parse_tri(const std::string& text) {
  std::istringstream in(text);
  return read_tri(in);
}

void write_tri(std::ostream& out, const Triangulation& t, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream cs(comment);
    std::string line;
    while (std::getline(cs, line)) out << "# " << line << '\n';
  }
  out << "n " << t.vertex_count() << '\n';
  for (const Face& f : t.faces()) out << "f " << f.v[0] << ' ' << f.v[1] << ' ' << f.v[2] << '\n';
}

void write_tri_file(const std::filesystem::path& path, const Triangulation& t, const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  write_tri(out, t, comment);
}

std::string format_tri(const Triangulation& t) {
  std::ostringstream os;
  write_tri(os, t);
  return os.str();
}

}  // namespace trisurf
