#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace surftopo {

enum class Errc {
  degenerate_triangle,
  duplicate_triangle,
  empty_input,
  unknown_vertex,
  unknown_triangle,
  id_overflow,
  not_a_surface,
  not_connected,
  not_closed,
  inconsistent_invariants,
  invalid_genus,
  triangle_touches_boundary,
  not_a_boundary_component,
  syntax_error,
  label_count_error,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::degenerate_triangle: return "DegenerateTriangle";
    case Errc::duplicate_triangle: return "DuplicateTriangle";
    case Errc::empty_input: return "EmptyInput";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_triangle: return "UnknownTriangle";
    case Errc::id_overflow: return "IdOverflow";
    case Errc::not_a_surface: return "NotASurface";
    case Errc::not_connected: return "NotConnected";
    case Errc::not_closed: return "NotClosed";
    case Errc::inconsistent_invariants: return "InconsistentInvariants";
    case Errc::invalid_genus: return "InvalidGenus";
    case Errc::triangle_touches_boundary: return "TriangleTouchesBoundary";
    case Errc::not_a_boundary_component: return "NotABoundaryComponent";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::label_count_error: return "LabelCountError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class TopologyError : public std::runtime_error {
 public:
  TopologyError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the text readers. `location` is a 1-based line number for
/// surface files and a 0-based character offset for edge words.
class ParseError : public TopologyError {
 public:
  ParseError(Errc code, std::size_t location, const std::string& message)
      : TopologyError(code, message), location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

}  // namespace surftopo
