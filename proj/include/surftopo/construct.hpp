#pragma once

// Standard triangulated surfaces and the surgery operations used to build
// the rest: puncturing, capping a boundary circle, and the connected sum.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "surftopo/complex.hpp"
#include "surftopo/scheme.hpp"
#include "surftopo/surface.hpp"

namespace surftopo {

enum class StandardSurface { sphere, torus, projective_plane, klein, disk, cylinder, mobius };

inline std::optional<StandardSurface> standard_surface_from_name(std::string_view name) {
  if (name == "sphere") return StandardSurface::sphere;
  if (name == "torus") return StandardSurface::torus;
  if (name == "rp2" || name == "projective_plane") return StandardSurface::projective_plane;
  if (name == "klein") return StandardSurface::klein;
  if (name == "disk") return StandardSurface::disk;
  if (name == "cylinder") return StandardSurface::cylinder;
  if (name == "mobius") return StandardSurface::mobius;
  return std::nullopt;
}

/**
 * Fixed triangulations:
 *
 *   sphere            tetrahedron boundary on 0..3                     (4,6,4)
 *   torus             3x3 grid on ids 3*row+col, opposite sides glued  (9,27,18)
 *   projective_plane  minimal 6-vertex triangulation on 0..5           (6,15,10)
 *   klein             scheme_to_complex("abab^-1")
 *   disk              the triangle (0,1,2)                             (3,3,1)
 *   cylinder          annulus between circles 0-1-2 and 3-4-5          (6,12,6)
 *   mobius            strip (1,2,3),(2,3,4),(3,4,5),(4,5,1),(5,1,2)    (5,10,5)
 */
inline SurfaceComplex gen_standard(StandardSurface which) {
  switch (which) {
    case StandardSurface::sphere:
      return SurfaceComplex::from_triples({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    case StandardSurface::torus: {
      std::vector<std::array<VertexId, 3>> ts;
      const auto id = [](VertexId r, VertexId c) { return 3 * (r % 3) + c % 3; };
      for (VertexId r = 0; r < 3; ++r) {
        for (VertexId c = 0; c < 3; ++c) {
          ts.push_back({id(r, c), id(r + 1, c), id(r + 1, c + 1)});
          ts.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
        }
      }
      return SurfaceComplex::from_triples(ts);
    }
    case StandardSurface::projective_plane:
      return SurfaceComplex::from_triples({{0, 1, 3},
                                           {0, 1, 5},
                                           {0, 2, 4},
                                           {0, 2, 5},
                                           {0, 3, 4},
                                           {1, 2, 3},
                                           {1, 2, 4},
                                           {1, 4, 5},
                                           {2, 3, 5},
                                           {3, 4, 5}});
    case StandardSurface::klein:
      return scheme_to_complex(parse_word("abab^-1"));
    case StandardSurface::disk:
      return SurfaceComplex::from_triples({{0, 1, 2}});
    case StandardSurface::cylinder:
      return SurfaceComplex::from_triples(
          {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
    case StandardSurface::mobius:
      return SurfaceComplex::from_triples({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}, {5, 1, 2}});
  }
  throw TopologyError(Errc::syntax_error, "unknown standard surface");
}

namespace detail {

inline std::set<VertexId> boundary_vertices(const SurfaceComplex& c) {
  std::set<VertexId> out;
  for (const auto& e : boundary_edges(c)) {
    out.insert(e.first);
    out.insert(e.second);
  }
  return out;
}

}  // namespace detail

/// Removes the open triangle `t`, opening a new boundary circle of length 3.
inline SurfaceComplex puncture(const SurfaceComplex& c, const Triangle& t) {
  const auto index = c.triangle_index(t);
  if (!index) {
    throw TopologyError(Errc::unknown_triangle, "puncture: triangle " + to_string(t) +
                                                    " is not in the complex");
  }
  require_surface(c, "puncture");
  const auto boundary = detail::boundary_vertices(c);
  for (VertexId x : t.v) {
    if (boundary.count(x)) {
      throw TopologyError(Errc::triangle_touches_boundary,
                          "puncture: vertex " + std::to_string(x) + " of " + to_string(t) +
                              " lies on the boundary");
    }
  }
  std::vector<Triangle> ts = c.triangles();
  ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(*index));
  return SurfaceComplex(std::move(ts));
}

/// Punctures the least triangle clear of the boundary, subdividing first
/// until one exists.
inline SurfaceComplex add_hole(SurfaceComplex c) {
  require_surface(c, "add_hole");
  for (;;) {
    const auto boundary = detail::boundary_vertices(c);
    for (const auto& t : c.triangles()) {
      if (std::none_of(t.v.begin(), t.v.end(), [&](VertexId x) { return boundary.count(x) > 0; })) {
        return puncture(c, t);
      }
    }
    c = barycentric_subdivision(c);
  }
}

/// Cones off one boundary circle with a fresh vertex max_vertex()+1.
inline SurfaceComplex cap_boundary(const SurfaceComplex& c, const BoundaryComponent& comp) {
  const auto edges_of = [](const std::vector<VertexId>& cycle) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const VertexId a = cycle[i];
      const VertexId b = cycle[(i + 1) % cycle.size()];
      if (a == b) return std::set<Edge>{};
      out.insert(Edge::make(a, b));
    }
    return out;
  };
  const auto wanted = edges_of(comp.cycle);
  bool found = false;
  for (const auto& b : boundary_components(c)) {
    if (!wanted.empty() && edges_of(b.cycle) == wanted && b.cycle.size() == comp.cycle.size()) {
      found = true;
    }
  }
  if (!found) {
    throw TopologyError(Errc::not_a_boundary_component,
                        "cap_boundary: cycle is not a boundary component of the complex");
  }
  if (c.max_vertex() == std::numeric_limits<VertexId>::max()) {
    throw TopologyError(Errc::id_overflow, "cap_boundary: no fresh vertex id available");
  }
  const VertexId cone = c.max_vertex() + 1;
  std::vector<Triangle> ts = c.triangles();
  for (const auto& e : wanted) ts.push_back(Triangle::make(e.first, e.second, cone));
  return SurfaceComplex(std::move(ts));
}

/// Removes the least triangle of each operand and glues the two holes. The
/// least vertices of the removed triangles are matched and the circles are
/// traversed in opposite directions. Operands' other vertices keep their ids
/// in `a`; those of `b` are renumbered from a.max_vertex()+1 in id order.
///
/// `subdivide_operands` subdivides both inputs once before surgery.
inline SurfaceComplex connected_sum(const SurfaceComplex& a_in, const SurfaceComplex& b_in,
                                    bool subdivide_operands = false) {
  for (const auto* x : {&a_in, &b_in}) {
    require_surface(*x, "connected_sum");
    if (!is_closed(*x)) {
      throw TopologyError(Errc::not_closed, "connected_sum: operand has boundary");
    }
  }
  const SurfaceComplex a = subdivide_operands ? barycentric_subdivision(a_in) : a_in;
  const SurfaceComplex b = subdivide_operands ? barycentric_subdivision(b_in) : b_in;
  const Triangle ta = a.triangles().front();
  const Triangle tb = b.triangles().front();

  std::map<VertexId, VertexId> to_a{{tb.v[0], ta.v[0]}, {tb.v[2], ta.v[1]}, {tb.v[1], ta.v[2]}};
  VertexId fresh = a.max_vertex() + 1;
  for (VertexId v : b.vertices()) {
    if (!to_a.count(v)) to_a[v] = fresh++;
  }

  std::vector<Triangle> ts(a.triangles().begin() + 1, a.triangles().end());
  for (auto it = b.triangles().begin() + 1; it != b.triangles().end(); ++it) {
    ts.push_back(Triangle::make(to_a[it->v[0]], to_a[it->v[1]], to_a[it->v[2]]));
  }
  return SurfaceComplex(std::move(ts));
}

namespace detail {

inline void require_counts(int g, int k, int min_genus, std::string_view op) {
  if (g < min_genus || k < 0) {
    throw TopologyError(Errc::invalid_genus, std::string(op) + ": genus must be >= " +
                                                 std::to_string(min_genus) +
                                                 " and boundary count >= 0");
  }
}

inline SurfaceComplex sum_onto_sphere(const SurfaceComplex& summand, int copies, int holes) {
  SurfaceComplex acc = gen_standard(StandardSurface::sphere);
  for (int i = 0; i < copies; ++i) acc = connected_sum(acc, summand);
  for (int i = 0; i < holes; ++i) acc = add_hole(acc);
  return acc;
}

}  // namespace detail

/// Orientable genus g with k boundary circles: g tori summed onto a sphere,
/// then k holes.
inline SurfaceComplex gen_sigma(int g, int k) {
  detail::require_counts(g, k, 0, "gen_sigma");
  return detail::sum_onto_sphere(gen_standard(StandardSurface::torus), g, k);
}

/// Nonorientable genus g >= 1 with k boundary circles.
inline SurfaceComplex gen_u(int g, int k) {
  detail::require_counts(g, k, 1, "gen_u");
  return detail::sum_onto_sphere(gen_standard(StandardSurface::projective_plane), g, k);
}

}  // namespace surftopo
