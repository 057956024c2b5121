#pragma once

// Surface validation, boundary extraction and orientability.

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "surftopo/complex.hpp"

namespace surftopo {

enum class ViolationKind {
  orphan_simplex,   // a vertex or edge lies in no triangle
  edge_degree,      // an edge lies in more than two triangles
  disconnected,     // triangle adjacency graph is not connected
  vertex_link,      // link is neither a single cycle nor a single path
  interior_on_boundary,  // cyclic link but the vertex touches a boundary edge
};

constexpr std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::orphan_simplex: return "orphan-simplex";
    case ViolationKind::edge_degree: return "edge-degree";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::vertex_link: return "vertex-link";
    case ViolationKind::interior_on_boundary: return "interior-on-boundary";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> simplex;

  bool operator==(const Violation&) const = default;
};

inline std::string to_string(const Violation& v) {
  std::string s = "violation ";
  s += to_string(v.kind);
  s += " (";
  for (std::size_t i = 0; i < v.simplex.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.simplex[i]);
  }
  return s + ")";
}

enum class ValidationLevel { pseudo, surface };

struct SurfaceReport {
  ValidationLevel level = ValidationLevel::surface;
  bool is_pseudo_surface = false;
  bool is_surface = false;
  std::vector<Violation> violations;

  /// True iff the complex passes at the level the report was produced for.
  bool ok() const { return level == ValidationLevel::pseudo ? is_pseudo_surface : is_surface; }
};

/// Shape of a vertex link viewed as a 1-complex. `vertices` lists the link
/// in traversal order when it is a single cycle or path.
struct LinkShape {
  enum class Kind { cycle, path, other };
  Kind kind = Kind::other;
  std::vector<VertexId> vertices;
};

inline LinkShape link_shape(const SurfaceComplex& c, VertexId v) {
  const auto edges = link(c, v);
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  LinkShape shape;
  VertexId start = adj.begin()->first;
  std::size_t ends = 0;
  for (auto& [x, ns] : adj) {
    if (ns.size() > 2) return shape;
    std::sort(ns.begin(), ns.end());
    if (ns.size() == 1) {
      if (ends == 0) start = x;
      ++ends;
    }
  }
  if (ends != 0 && ends != 2) return shape;

  // Walk from `start`; a single component visits every link vertex.
  std::vector<VertexId> walk{start};
  VertexId prev = start;
  VertexId cur = adj[start].front();
  while (cur != start) {
    walk.push_back(cur);
    const auto& ns = adj[cur];
    if (ns.size() == 1) break;
    const VertexId next = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = next;
  }
  if (walk.size() != adj.size()) return shape;
  shape.kind = ends == 0 ? LinkShape::Kind::cycle : LinkShape::Kind::path;
  shape.vertices = std::move(walk);
  return shape;
}

/// Groups of triangle indices connected through shared edges, ordered by
/// their least triangle.
inline std::vector<std::vector<std::size_t>> triangle_components(const SurfaceComplex& c) {
  const auto& ts = c.triangles();
  std::vector<bool> seen(ts.size(), false);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t root = 0; root < ts.size(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> group;
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      group.push_back(t);
      for (const auto& e : ts[t].edges()) {
        for (std::size_t u : c.triangles_on_edge(*c.edge_index(e))) {
          if (!seen[u]) {
            seen[u] = true;
            queue.push_back(u);
          }
        }
      }
    }
    std::sort(group.begin(), group.end());
    groups.push_back(std::move(group));
  }
  return groups;
}

namespace detail {

inline void check_pseudo_conditions(const SurfaceComplex& c, std::vector<Violation>& out) {
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    if (c.triangles_at_vertex(i).empty()) {
      out.push_back({ViolationKind::orphan_simplex, {c.vertices()[i]}});
    }
  }
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    const auto n = c.triangles_on_edge(i).size();
    const Edge& e = c.edges()[i];
    if (n == 0) out.push_back({ViolationKind::orphan_simplex, {e.first, e.second}});
    if (n > 2) out.push_back({ViolationKind::edge_degree, {e.first, e.second}});
  }
  const auto groups = triangle_components(c);
  for (std::size_t g = 1; g < groups.size(); ++g) {
    const auto& t = c.triangles()[groups[g].front()];
    out.push_back({ViolationKind::disconnected, {t.v.begin(), t.v.end()}});
  }
}

inline void check_links(const SurfaceComplex& c, std::vector<Violation>& out) {
  std::vector<bool> on_boundary(c.vertices().size(), false);
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    if (c.triangles_on_edge(i).size() == 1) {
      on_boundary[*c.vertex_index(c.edges()[i].first)] = true;
      on_boundary[*c.vertex_index(c.edges()[i].second)] = true;
    }
  }
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    const VertexId v = c.vertices()[i];
    const auto shape = link_shape(c, v);
    if (shape.kind == LinkShape::Kind::other) {
      out.push_back({ViolationKind::vertex_link, {v}});
    } else if (shape.kind == LinkShape::Kind::cycle && on_boundary[i]) {
      out.push_back({ViolationKind::interior_on_boundary, {v}});
    }
  }
}

}  // namespace detail

/// The necessary conditions for a surface triangulation: every simplex is a
/// face of a triangle, every edge lies in at most two triangles, and the
/// triangles are connected through shared edges. `is_surface` is filled in
/// as well, but only pseudo-surface violations are listed.
inline SurfaceReport check_pseudo_surface(const SurfaceComplex& c) {
  SurfaceReport r;
  r.level = ValidationLevel::pseudo;
  detail::check_pseudo_conditions(c, r.violations);
  r.is_pseudo_surface = r.violations.empty();
  if (r.is_pseudo_surface) {
    std::vector<Violation> links;
    detail::check_links(c, links);
    r.is_surface = links.empty();
  }
  return r;
}

/// Pseudo-surface conditions plus: every vertex link is a single cycle
/// (interior vertex) or a single path (boundary vertex).
inline SurfaceReport check_surface(const SurfaceComplex& c) {
  SurfaceReport r;
  r.level = ValidationLevel::surface;
  detail::check_pseudo_conditions(c, r.violations);
  r.is_pseudo_surface = r.violations.empty();
  detail::check_links(c, r.violations);
  r.is_surface = r.violations.empty();
  return r;
}

inline void require_surface(const SurfaceComplex& c, std::string_view op) {
  const auto r = check_surface(c);
  if (!r.is_surface) {
    throw TopologyError(Errc::not_a_surface, std::string(op) + ": input is not a surface (" +
                                                 to_string(r.violations.front()) + ")");
  }
}

/// Splits by triangle adjacency; components ordered by least vertex id.
inline std::vector<SurfaceComplex> connected_components(const SurfaceComplex& c) {
  std::vector<SurfaceComplex> out;
  for (const auto& group : triangle_components(c)) {
    std::vector<Triangle> ts;
    for (std::size_t i : group) ts.push_back(c.triangles()[i]);
    out.emplace_back(std::move(ts));
  }
  std::stable_sort(out.begin(), out.end(), [](const SurfaceComplex& a, const SurfaceComplex& b) {
    return a.vertices().front() < b.vertices().front();
  });
  return out;
}

/// Edges lying in exactly one triangle.
inline std::vector<Edge> boundary_edges(const SurfaceComplex& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    if (c.triangles_on_edge(i).size() == 1) out.push_back(c.edges()[i]);
  }
  return out;
}

inline bool is_closed(const SurfaceComplex& c) { return boundary_edges(c).empty(); }

struct BoundaryComponent {
  std::vector<VertexId> cycle;

  bool operator==(const BoundaryComponent&) const = default;
};

namespace detail {

inline std::vector<BoundaryComponent> trace_boundary(const SurfaceComplex& c) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : boundary_edges(c)) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());

  std::vector<BoundaryComponent> out;
  std::map<VertexId, bool> visited;
  for (const auto& [start, ns] : adj) {
    if (visited[start]) continue;
    BoundaryComponent comp;
    VertexId prev = start;
    VertexId cur = ns.front();
    comp.cycle.push_back(start);
    visited[start] = true;
    while (cur != start) {
      comp.cycle.push_back(cur);
      visited[cur] = true;
      const auto& next = adj[cur];
      const VertexId step = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

/// Boundary circles, each starting at its least vertex and heading to that
/// vertex's lesser boundary neighbour; ordered by least vertex.
inline std::vector<BoundaryComponent> boundary_components(const SurfaceComplex& c) {
  require_surface(c, "boundary_components");
  return detail::trace_boundary(c);
}

/// One sign per triangle of the complex, aligned with triangles(). +1 keeps
/// the cyclic order of the sorted triple, -1 reverses it.
struct OrientationAssignment {
  std::vector<int> signs;
};

/// Closed walk of edge-adjacent triangles along which propagated
/// orientation comes back reversed. First and last entries coincide.
struct NonOrientabilityWitness {
  std::vector<Triangle> triangle_path;
};

using OrientabilityResult = std::variant<OrientationAssignment, NonOrientabilityWitness>;

inline bool is_orientable(const OrientabilityResult& r) {
  return std::holds_alternative<OrientationAssignment>(r);
}

/// Direction (+1 = first->second) that triangle `t` with `sign` induces on
/// its face `e`.
inline int induced_direction(const Triangle& t, int sign, const Edge& e) {
  return sign * t.incidence(e);
}

/// Edge-by-edge check that adjacent triangles induce opposite directions.
inline bool is_compatible(const SurfaceComplex& c, const OrientationAssignment& a) {
  if (a.signs.size() != c.triangles().size()) return false;
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    const auto on = c.triangles_on_edge(i);
    if (on.size() != 2) continue;
    const Edge& e = c.edges()[i];
    if (induced_direction(c.triangles()[on[0]], a.signs[on[0]], e) ==
        induced_direction(c.triangles()[on[1]], a.signs[on[1]], e)) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline OrientabilityResult propagate_orientation(const SurfaceComplex& c) {
  const auto& ts = c.triangles();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<int> sign(ts.size(), 0);
  std::vector<std::size_t> parent(ts.size(), none);
  std::deque<std::size_t> queue{0};
  sign[0] = 1;

  const auto chain_to_root = [&](std::size_t t) {
    std::vector<std::size_t> chain{t};
    while (parent[chain.back()] != none) chain.push_back(parent[chain.back()]);
    return chain;
  };

  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (const auto& e : ts[t].edges()) {
      for (std::size_t u : c.triangles_on_edge(*c.edge_index(e))) {
        if (u == t) continue;
        const int want = -sign[t] * ts[t].incidence(e) * ts[u].incidence(e);
        if (sign[u] == 0) {
          sign[u] = want;
          parent[u] = t;
          queue.push_back(u);
        } else if (sign[u] != want) {
          // Close the loop through the lowest common ancestor of t and u.
          auto up_t = chain_to_root(t);
          auto up_u = chain_to_root(u);
          while (up_t.size() > 1 && up_u.size() > 1 &&
                 up_t[up_t.size() - 2] == up_u[up_u.size() - 2]) {
            up_t.pop_back();
            up_u.pop_back();
          }
          NonOrientabilityWitness w;
          for (auto it = up_t.rbegin(); it != up_t.rend(); ++it) w.triangle_path.push_back(ts[*it]);
          for (std::size_t x : up_u) w.triangle_path.push_back(ts[x]);
          return w;
        }
      }
    }
  }
  return OrientationAssignment{std::move(sign)};
}

}  // namespace detail

/// Breadth-first sign propagation from the least triangle (sign +1).
inline OrientabilityResult orientability(const SurfaceComplex& c) {
  require_surface(c, "orientability");
  return detail::propagate_orientation(c);
}

}  // namespace surftopo
