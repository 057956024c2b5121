#pragma once

/**
 * Finite abstract 2-dimensional simplicial complexes.
 *
 * A complex is given by its triangles; the edge and vertex sets are derived
 * as the faces of those triangles, so closure under faces holds by
 * construction. Complexes are immutable values and carry no coordinates.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "surftopo/errors.hpp"

namespace surftopo {

using VertexId = std::uint32_t;

/// Unordered pair of distinct vertices, stored with first < second.
struct Edge {
  VertexId first = 0;
  VertexId second = 0;

  static Edge make(VertexId a, VertexId b) {
    if (a == b) {
      throw TopologyError(Errc::degenerate_triangle,
                          "edge with repeated vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  bool contains(VertexId v) const { return first == v || second == v; }
  VertexId other(VertexId v) const { return v == first ? second : first; }

  auto operator<=>(const Edge&) const = default;
};

/// Three distinct vertices in strictly increasing order. Orientation is not
/// part of the value; see OrientationAssignment.
struct Triangle {
  std::array<VertexId, 3> v{};

  static Triangle make(VertexId a, VertexId b, VertexId c) {
    if (a == b || b == c || a == c) {
      throw TopologyError(Errc::degenerate_triangle,
                          "triangle (" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + ") has a repeated vertex");
    }
    std::array<VertexId, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    return Triangle{s};
  }

  bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }

  /// Faces in canonical order: (v0,v1), (v0,v2), (v1,v2).
  std::array<Edge, 3> edges() const {
    return {Edge{v[0], v[1]}, Edge{v[0], v[2]}, Edge{v[1], v[2]}};
  }

  /// The edge of this triangle not containing `x`; `x` must be a vertex.
  Edge opposite(VertexId x) const {
    if (x == v[0]) return Edge{v[1], v[2]};
    if (x == v[1]) return Edge{v[0], v[2]};
    return Edge{v[0], v[1]};
  }

  /// The vertex of this triangle not on `e`; `e` must be a face.
  VertexId apex(const Edge& e) const {
    for (VertexId x : v) {
      if (!e.contains(x)) return x;
    }
    return v[0];
  }

  /// Coefficient of face `e` in the boundary of the sorted-orientation
  /// triangle: +1 for (v1,v2), -1 for (v0,v2), +1 for (v0,v1).
  int incidence(const Edge& e) const { return e == Edge{v[0], v[2]} ? -1 : 1; }

  auto operator<=>(const Triangle&) const = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

inline std::string to_string(const Triangle& t) {
  return "(" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]) + ")";
}

struct FVector {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;

  auto operator<=>(const FVector&) const = default;
};

class SurfaceComplex {
 public:
  /// Takes canonical triangles; rejects an empty set and repeated triangles.
  explicit SurfaceComplex(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
    if (triangles_.empty()) {
      throw TopologyError(Errc::empty_input, "complex has no triangles");
    }
    std::sort(triangles_.begin(), triangles_.end());
    auto dup = std::adjacent_find(triangles_.begin(), triangles_.end());
    if (dup != triangles_.end()) {
      throw TopologyError(Errc::duplicate_triangle, "duplicate triangle " + to_string(*dup));
    }
    build_faces();
  }

  /// Builds from raw triples in any vertex order.
  static SurfaceComplex from_triples(std::span<const std::array<VertexId, 3>> triples) {
    std::vector<Triangle> ts;
    ts.reserve(triples.size());
    for (const auto& t : triples) ts.push_back(Triangle::make(t[0], t[1], t[2]));
    return SurfaceComplex(std::move(ts));
  }

  static SurfaceComplex from_triples(std::initializer_list<std::array<VertexId, 3>> triples) {
    return from_triples(std::span<const std::array<VertexId, 3>>(triples.begin(), triples.size()));
  }

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  VertexId max_vertex() const { return vertices_.back(); }

  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  std::optional<std::size_t> vertex_index(VertexId v) const { return index_of(vertices_, v); }
  std::optional<std::size_t> edge_index(const Edge& e) const { return index_of(edges_, e); }
  std::optional<std::size_t> triangle_index(const Triangle& t) const {
    return index_of(triangles_, t);
  }

  /// Indices (into triangles()) of the triangles having edges()[edge] as a face.
  std::span<const std::size_t> triangles_on_edge(std::size_t edge) const {
    return edge_triangles_[edge];
  }

  /// Indices (into triangles()) of the triangles containing vertices()[vertex].
  std::span<const std::size_t> triangles_at_vertex(std::size_t vertex) const {
    return vertex_triangles_[vertex];
  }

  bool operator==(const SurfaceComplex& other) const { return triangles_ == other.triangles_; }

 private:
  template <class T>
  static std::optional<std::size_t> index_of(const std::vector<T>& sorted, const T& x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - sorted.begin());
  }

  void build_faces() {
    for (const auto& t : triangles_) {
      for (const auto& e : t.edges()) edges_.push_back(e);
      for (VertexId x : t.v) vertices_.push_back(x);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    edge_triangles_.assign(edges_.size(), {});
    vertex_triangles_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
      for (const auto& e : triangles_[i].edges()) edge_triangles_[*edge_index(e)].push_back(i);
      for (VertexId x : triangles_[i].v) vertex_triangles_[*vertex_index(x)].push_back(i);
    }
  }

  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<std::size_t>> edge_triangles_;
  std::vector<std::vector<std::size_t>> vertex_triangles_;
};

inline SurfaceComplex build_complex(std::span<const std::array<VertexId, 3>> triples) {
  return SurfaceComplex::from_triples(triples);
}

inline FVector f_vector(const SurfaceComplex& c) {
  return {c.vertices().size(), c.edges().size(), c.triangles().size()};
}

inline long long euler_characteristic(const FVector& f) {
  return static_cast<long long>(f.vertices) - static_cast<long long>(f.edges) +
         static_cast<long long>(f.triangles);
}

inline long long euler_characteristic(const SurfaceComplex& c) {
  return euler_characteristic(f_vector(c));
}

/// Barycentric subdivision together with the ids it assigned to the
/// barycenters. Edge barycenters are numbered from max_vertex()+1 in
/// lexicographic edge order, followed by triangle barycenters in
/// lexicographic triangle order.
class Subdivision {
 public:
  explicit Subdivision(const SurfaceComplex& c)
      : source_(c), complex_(subdivide(c)) {}

  const SurfaceComplex& complex() const { return complex_; }

  VertexId edge_vertex(const Edge& e) const {
    auto i = source_.edge_index(e);
    if (!i) throw TopologyError(Errc::unknown_vertex, "edge " + to_string(e) + " not in complex");
    return first_fresh(source_) + static_cast<VertexId>(*i);
  }

  VertexId triangle_vertex(const Triangle& t) const {
    auto i = source_.triangle_index(t);
    if (!i) {
      throw TopologyError(Errc::unknown_triangle, "triangle " + to_string(t) + " not in complex");
    }
    return first_fresh(source_) + static_cast<VertexId>(source_.edges().size() + *i);
  }

 private:
  static VertexId first_fresh(const SurfaceComplex& c) { return c.max_vertex() + 1; }

  static SurfaceComplex subdivide(const SurfaceComplex& c) {
    const std::uint64_t needed = std::uint64_t{c.max_vertex()} + c.edges().size() +
                                 c.triangles().size();
    if (needed > std::numeric_limits<VertexId>::max()) {
      throw TopologyError(Errc::id_overflow, "subdivision would exceed the vertex id range");
    }
    const VertexId base = first_fresh(c);
    const auto edge_id = [&](const Edge& e) {
      return base + static_cast<VertexId>(*c.edge_index(e));
    };
    std::vector<Triangle> out;
    out.reserve(6 * c.triangles().size());
    for (std::size_t i = 0; i < c.triangles().size(); ++i) {
      const Triangle& t = c.triangles()[i];
      const VertexId center = base + static_cast<VertexId>(c.edges().size() + i);
      for (const Edge& e : t.edges()) {
        const VertexId mid = edge_id(e);
        out.push_back(Triangle::make(center, mid, e.first));
        out.push_back(Triangle::make(center, mid, e.second));
      }
    }
    return SurfaceComplex(std::move(out));
  }

  SurfaceComplex source_;
  SurfaceComplex complex_;
};

inline SurfaceComplex barycentric_subdivision(const SurfaceComplex& c) {
  return Subdivision(c).complex();
}

inline std::size_t require_vertex(const SurfaceComplex& c, VertexId v) {
  auto i = c.vertex_index(v);
  if (!i) {
    throw TopologyError(Errc::unknown_vertex, "vertex " + std::to_string(v) + " not in complex");
  }
  return *i;
}

/// All triangles containing `v`, with their faces.
inline SurfaceComplex star(const SurfaceComplex& c, VertexId v) {
  std::vector<Triangle> ts;
  for (std::size_t i : c.triangles_at_vertex(require_vertex(c, v))) ts.push_back(c.triangles()[i]);
  return SurfaceComplex(std::move(ts));
}

/// Edges opposite `v` in the triangles containing it, sorted.
inline std::vector<Edge> link(const SurfaceComplex& c, VertexId v) {
  std::vector<Edge> out;
  for (std::size_t i : c.triangles_at_vertex(require_vertex(c, v))) {
    out.push_back(c.triangles()[i].opposite(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Applies an injective relabeling. Vertices missing from `map` keep their id.
inline SurfaceComplex relabel(const SurfaceComplex& c, const std::map<VertexId, VertexId>& map) {
  const auto image = [&](VertexId x) {
    auto it = map.find(x);
    return it == map.end() ? x : it->second;
  };
  std::vector<Triangle> ts;
  ts.reserve(c.triangles().size());
  for (const auto& t : c.triangles()) {
    ts.push_back(Triangle::make(image(t.v[0]), image(t.v[1]), image(t.v[2])));
  }
  return SurfaceComplex(std::move(ts));
}

/// Shifts every vertex id by `offset`.
inline SurfaceComplex shift_ids(const SurfaceComplex& c, VertexId offset) {
  if (std::uint64_t{c.max_vertex()} + offset > std::numeric_limits<VertexId>::max()) {
    throw TopologyError(Errc::id_overflow, "shifted id out of range");
  }
  std::vector<Triangle> ts;
  ts.reserve(c.triangles().size());
  for (const auto& t : c.triangles()) {
    ts.push_back(Triangle{{t.v[0] + offset, t.v[1] + offset, t.v[2] + offset}});
  }
  return SurfaceComplex(std::move(ts));
}

/// Union of two complexes; fails on a shared triangle.
inline SurfaceComplex disjoint_union(const SurfaceComplex& a, const SurfaceComplex& b) {
  std::vector<Triangle> ts = a.triangles();
  ts.insert(ts.end(), b.triangles().begin(), b.triangles().end());
  return SurfaceComplex(std::move(ts));
}

}  // namespace surftopo
