#pragma once

/**
 * Polygonal presentations of closed surfaces.
 *
 * An edge word lists the sides of a 2n-gon read around its boundary, each
 * side a label with exponent +1 or -1. Every label occurs exactly twice and
 * the two occurrences are glued respecting their directions.
 *
 * Grammar accepted by parse_word (whitespace between terms is ignored):
 *
 *     word  := term+
 *     term  := label ("^-1")?
 *     label := ASCII letter followed by optional decimal digits
 */

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "surftopo/classify.hpp"
#include "surftopo/complex.hpp"

namespace surftopo {

struct EdgeLetter {
  std::string label;
  int exponent = 1;

  bool operator==(const EdgeLetter&) const = default;
};

struct EdgeWord {
  std::vector<EdgeLetter> letters;

  bool operator==(const EdgeWord&) const = default;
};

inline std::string to_string(const EdgeWord& w) {
  std::string s;
  for (const auto& l : w.letters) {
    s += l.label;
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

/// Positions of the two occurrences of each label, in order of first use.
inline std::vector<std::pair<std::size_t, std::size_t>> label_pairs(const EdgeWord& w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    auto [it, fresh] = slot.try_emplace(w.letters[i].label, out.size());
    if (fresh) {
      out.push_back({i, i});
    } else {
      out[it->second].second = i;
    }
  }
  return out;
}

/// Throws LabelCountError unless every label occurs exactly twice.
inline void validate_word(const EdgeWord& w, const std::vector<std::size_t>& offsets = {}) {
  if (w.letters.empty()) throw ParseError(Errc::syntax_error, 0, "empty edge word");
  std::map<std::string, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < w.letters.size(); ++i) seen[w.letters[i].label].push_back(i);
  for (const auto& [label, at] : seen) {
    if (at.size() != 2) {
      const std::size_t pos = offsets.empty() ? at.front() : offsets[at.front()];
      throw ParseError(Errc::label_count_error, pos,
                       "label '" + label + "' occurs " + std::to_string(at.size()) +
                           " time(s); each label must occur exactly twice");
    }
  }
}

inline EdgeWord parse_word(std::string_view text) {
  EdgeWord w;
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  const auto is_alpha = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; };
  const auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
  const auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (!is_alpha(text[i])) {
      throw ParseError(Errc::syntax_error, i,
                       "expected a label at position " + std::to_string(i) + ", found '" +
                           std::string(1, text[i]) + "'");
    }
    const std::size_t start = i++;
    while (i < text.size() && is_digit(text[i])) ++i;
    EdgeLetter letter{std::string(text.substr(start, i - start)), 1};
    if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 3) != "^-1") {
        throw ParseError(Errc::syntax_error, i,
                         "expected '^-1' at position " + std::to_string(i));
      }
      letter.exponent = -1;
      i += 3;
    }
    offsets.push_back(start);
    w.letters.push_back(std::move(letter));
  }
  validate_word(w, offsets);
  return w;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root survives, so each class is represented by its least member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

struct SchemeInvariants {
  std::size_t vertex_classes = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 1;
  long long chi = 0;
  bool orientable = true;

  bool operator==(const SchemeInvariants&) const = default;
};

/// Corner i of the polygon sits between side i-1 and side i. Side i runs
/// from corner i to corner i+1 when its exponent is +1, backwards otherwise;
/// gluing two sides identifies their tails and their heads.
inline SchemeInvariants scheme_invariants(const EdgeWord& w) {
  validate_word(w);
  const std::size_t sides = w.letters.size();
  const auto tail = [&](std::size_t i) { return w.letters[i].exponent > 0 ? i : (i + 1) % sides; };
  const auto head = [&](std::size_t i) { return w.letters[i].exponent > 0 ? (i + 1) % sides : i; };

  detail::UnionFind corners(sides);
  SchemeInvariants inv;
  for (const auto& [i, j] : label_pairs(w)) {
    corners.unite(tail(i), tail(j));
    corners.unite(head(i), head(j));
    if (w.letters[i].exponent == w.letters[j].exponent) inv.orientable = false;
  }
  for (std::size_t c = 0; c < sides; ++c) {
    if (corners.find(c) == c) ++inv.vertex_classes;
  }
  inv.edge_count = sides / 2;
  inv.chi = static_cast<long long>(inv.vertex_classes) - static_cast<long long>(inv.edge_count) + 1;
  return inv;
}

inline SurfaceClass classify_scheme(const EdgeWord& w) {
  const auto inv = scheme_invariants(w);
  return class_from_invariants(inv.orientable, inv.chi, 0);
}

/// Realizes the word as a closed simplicial surface: a fan over the polygon,
/// subdivided twice, with the side identifications applied to the boundary.
/// Output vertex ids are 0..V-1, ordered by the least pre-gluing id of each
/// vertex class.
inline SurfaceComplex scheme_to_complex(const EdgeWord& w) {
  validate_word(w);
  const std::size_t sides = w.letters.size();

  // Boundary points of each side in polygon order. A 2-gon gets a midpoint
  // on each side so that the fan is a genuine complex.
  std::vector<std::vector<VertexId>> side_points(sides);
  VertexId next = static_cast<VertexId>(sides);
  for (std::size_t i = 0; i < sides; ++i) {
    const auto from = static_cast<VertexId>(i);
    const auto to = static_cast<VertexId>((i + 1) % sides);
    if (sides == 2) {
      side_points[i] = {from, next++, to};
    } else {
      side_points[i] = {from, to};
    }
  }
  const VertexId center = next;
  std::vector<Triangle> fan;
  for (const auto& pts : side_points) {
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
      fan.push_back(Triangle::make(center, pts[j], pts[j + 1]));
    }
  }

  SurfaceComplex disk(std::move(fan));
  for (int pass = 0; pass < 2; ++pass) {
    Subdivision sd(disk);
    for (auto& pts : side_points) {
      std::vector<VertexId> refined{pts.front()};
      for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        refined.push_back(sd.edge_vertex(Edge::make(pts[j], pts[j + 1])));
        refined.push_back(pts[j + 1]);
      }
      pts = std::move(refined);
    }
    disk = sd.complex();
  }

  const std::size_t ids = std::size_t{disk.max_vertex()} + 1;
  detail::UnionFind glue(ids);
  const auto oriented = [&](std::size_t i) {
    auto pts = side_points[i];
    if (w.letters[i].exponent < 0) std::reverse(pts.begin(), pts.end());
    return pts;
  };
  for (const auto& [i, j] : label_pairs(w)) {
    const auto a = oriented(i);
    const auto b = oriented(j);
    for (std::size_t p = 0; p < a.size(); ++p) glue.unite(a[p], b[p]);
  }

  std::map<VertexId, VertexId> compact;
  for (VertexId v : disk.vertices()) {
    const auto root = static_cast<VertexId>(glue.find(v));
    compact.try_emplace(root, static_cast<VertexId>(compact.size()));
  }
  std::vector<Triangle> glued;
  glued.reserve(disk.triangles().size());
  for (const auto& t : disk.triangles()) {
    const auto image = [&](VertexId x) { return compact.at(static_cast<VertexId>(glue.find(x))); };
    glued.push_back(Triangle::make(image(t.v[0]), image(t.v[1]), image(t.v[2])));
  }
  return SurfaceComplex(std::move(glued));
}

}  // namespace surftopo
