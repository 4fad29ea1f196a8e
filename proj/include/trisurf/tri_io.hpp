#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "trisurf/triangulation.hpp"

namespace trisurf {

// ".tri" text format:
//   # comment
//   n <vertex count>
//   f <a> <b> <c>      one per face, a<b<c, lexicographic order
// Readers accept any face order; writers always emit the normal form.

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Triangulation read_tri(std::istream& in);
Triangulation read_tri_file(const std::filesystem::path& path);
Triangulation parse_tri(const std::string& text);

void write_tri(std::ostream& out, const Triangulation& t, const std::string& comment = {});
void write_tri_file(const std::filesystem::path& path, const Triangulation& t, const std::string& comment = {});
std::string format_tri(const Triangulation& t);

}  // namespace trisurf
