#pragma once

/**
 * `surface v1` text format.
 *
 *     # comment to end of line
 *     surface v1
 *     t 0 1 2
 *     t 0 1 3
 *
 * Blank lines and comments are ignored anywhere. The header must precede
 * every triangle line. Vertex ids are decimal integers below 2^32. Writers
 * emit triangles in canonical lexicographic order.
 */

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "surftopo/complex.hpp"

namespace surftopo {

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline VertexId parse_id(const std::string& tok, std::size_t line) {
  std::uint64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (tok.empty() || ec != std::errc{} || ptr != end || tok.front() == '+' ||
      value > std::numeric_limits<VertexId>::max()) {
    throw ParseError(Errc::syntax_error, line,
                     "line " + std::to_string(line) + ": invalid vertex id '" + tok + "'");
  }
  return static_cast<VertexId>(value);
}

}  // namespace detail

inline SurfaceComplex read_surface(std::istream& in) {
  bool header = false;
  std::vector<Triangle> triangles;
  std::set<Triangle> seen;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(number) + ": ";
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "surface" || tokens[1] != "v1") {
        throw ParseError(Errc::syntax_error, number, where + "expected header 'surface v1'");
      }
      header = true;
      continue;
    }
    if (tokens.size() != 4 || tokens[0] != "t") {
      throw ParseError(Errc::syntax_error, number, where + "expected 't A B C'");
    }
    const VertexId a = detail::parse_id(tokens[1], number);
    const VertexId b = detail::parse_id(tokens[2], number);
    const VertexId c = detail::parse_id(tokens[3], number);
    if (a == b || b == c || a == c) {
      throw ParseError(Errc::degenerate_triangle, number, where + "triangle has a repeated vertex");
    }
    const Triangle t = Triangle::make(a, b, c);
    if (!seen.insert(t).second) {
      throw ParseError(Errc::duplicate_triangle, number, where + "duplicate triangle " + to_string(t));
    }
    triangles.push_back(t);
  }
  if (!header) throw ParseError(Errc::syntax_error, 0, "missing header 'surface v1'");
  if (triangles.empty()) throw ParseError(Errc::empty_input, 0, "file has no triangles");
  return SurfaceComplex(std::move(triangles));
}

inline SurfaceComplex read_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(Errc::syntax_error, 0, "cannot open '" + path + "'");
  return read_surface(in);
}

inline void write_surface(std::ostream& out, const SurfaceComplex& c) {
  out << "surface v1\n";
  for (const auto& t : c.triangles()) out << "t " << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
}

inline std::string to_surface_text(const SurfaceComplex& c) {
  std::ostringstream out;
  write_surface(out, c);
  return out.str();
}

}  // namespace surftopo
