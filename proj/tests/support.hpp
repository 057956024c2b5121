#pragma once

// Test-only helpers: brute-force oracles that do not share code paths with
// the library, random generators, and the named surface corpus.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "surftopo.hpp"

namespace surftopo {

// Catch2 picks these up for failure messages.
inline std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << to_string(e); }
inline std::ostream& operator<<(std::ostream& os, const Triangle& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const SurfaceClass& s) { return os << to_string(s); }
inline std::ostream& operator<<(std::ostream& os, const HomologyGroup& h) { return os << to_string(h); }
inline std::ostream& operator<<(std::ostream& os, const Violation& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const FVector& f) {
  return os << "(" << f.vertices << "," << f.edges << "," << f.triangles << ")";
}

}  // namespace surftopo

namespace surftopo::testing {

// ---------------------------------------------------------------------------
// Integer oracles

inline BigInt det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt sum = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<BigInt>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      sub.push_back(std::move(row));
    }
    const BigInt term = m[0][col] * det(sub);
    sum += (col % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Invariant factors from determinantal divisors: D_k = gcd of all k x k
/// minors, d_k = D_k / D_{k-1}. Brute force, meant for matrices up to 4x4.
inline std::vector<BigInt> invariant_factors_by_minors(const IntegerMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    BigInt g = 0;
    for (const auto& rs : combinations(m.rows(), k)) {
      for (const auto& cs : combinations(m.cols(), k)) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
        }
        g = gcd(g, abs(det(sub)));
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline std::size_t rational_rank(const IntegerMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline IntegerMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> val(-bound, bound);
  IntegerMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = val(rng);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Orientation replay

/// Walks the witness, propagating a sign from its first triangle across each
/// shared edge; true when the sign arrives reversed.
inline bool witness_reverses(const NonOrientabilityWitness& w) {
  const auto& path = w.triangle_path;
  if (path.size() < 2 || path.front() != path.back()) return false;
  // Direction of edge (x,y) in cyclic order (t0,t1,t2) with given sign.
  const auto dir = [](const Triangle& t, int sign, VertexId x, VertexId y) {
    for (int i = 0; i < 3; ++i) {
      if (t.v[i] == x && t.v[(i + 1) % 3] == y) return sign;
      if (t.v[i] == y && t.v[(i + 1) % 3] == x) return -sign;
    }
    return 0;
  };
  int sign = 1;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    std::vector<VertexId> shared;
    for (VertexId x : path[i].v) {
      if (path[i + 1].contains(x)) shared.push_back(x);
    }
    if (shared.size() != 2) return false;
    const int here = dir(path[i], sign, shared[0], shared[1]);
    // Neighbour must run the shared edge the other way.
    sign = dir(path[i + 1], 1, shared[0], shared[1]) == -here ? 1 : -1;
  }
  return sign == -1;
}

// ---------------------------------------------------------------------------
// Random complexes and relabelings

inline SurfaceComplex random_complex(std::mt19937& rng) {
  std::uniform_int_distribution<VertexId> nverts(3, 9);
  const VertexId n = nverts(rng);
  std::vector<Triangle> all;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) all.push_back(Triangle{{a, b, c}});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(all.size(), 20));
  all.resize(count(rng));
  return SurfaceComplex(std::move(all));
}

/// Random injective relabeling onto ids in [0, 10 * |V|).
inline SurfaceComplex random_relabel(const SurfaceComplex& c, std::mt19937& rng) {
  std::vector<VertexId> pool(10 * c.vertices().size());
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::map<VertexId, VertexId> m;
  for (std::size_t i = 0; i < c.vertices().size(); ++i) m[c.vertices()[i]] = pool[i];
  return relabel(c, m);
}

// ---------------------------------------------------------------------------
// Corpus

struct Sample {
  std::string name;
  SurfaceComplex complex;
  SurfaceClass expected;
};

inline std::vector<Sample> corpus() {
  std::vector<Sample> out;
  const auto add = [&](std::string name, SurfaceComplex c, SurfaceClass s) {
    out.push_back({std::move(name), std::move(c), s});
  };
  const auto sphere = gen_standard(StandardSurface::sphere);
  const auto torus = gen_standard(StandardSurface::torus);
  const auto rp2 = gen_standard(StandardSurface::projective_plane);
  const auto klein = gen_standard(StandardSurface::klein);

  add("sphere", sphere, sigma(0));
  add("torus", torus, sigma(1));
  add("rp2", rp2, u(1));
  add("klein", klein, u(2));
  add("disk", gen_standard(StandardSurface::disk), sigma(0, 1));
  add("cylinder", gen_standard(StandardSurface::cylinder), sigma(0, 2));
  add("mobius", gen_standard(StandardSurface::mobius), u(1, 1));

  for (int g = 0; g <= 3; ++g) {
    for (int k = 0; k <= 3; ++k) {
      add("sigma(" + std::to_string(g) + "," + std::to_string(k) + ")", gen_sigma(g, k), sigma(g, k));
    }
  }
  for (int g = 1; g <= 3; ++g) {
    for (int k = 0; k <= 3; ++k) {
      add("u(" + std::to_string(g) + "," + std::to_string(k) + ")", gen_u(g, k), u(g, k));
    }
  }

  add("sphere-punctured", add_hole(sphere), sigma(0, 1));
  add("torus-punctured", add_hole(torus), sigma(1, 1));
  add("rp2-punctured", add_hole(rp2), u(1, 1));
  add("klein-punctured", add_hole(klein), u(2, 1));

  const std::vector<std::pair<std::string, std::pair<SurfaceComplex, SurfaceClass>>> closed = {
      {"sphere", {sphere, sigma(0)}},
      {"torus", {torus, sigma(1)}},
      {"rp2", {rp2, u(1)}},
      {"klein", {klein, u(2)}}};
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i; j < closed.size(); ++j) {
      const auto& [an, a] = closed[i];
      const auto& [bn, b] = closed[j];
      SurfaceClass s;
      if (a.second.orientable && b.second.orientable) {
        s = sigma(a.second.genus + b.second.genus);
      } else {
        const int ga = a.second.orientable ? 2 * a.second.genus : a.second.genus;
        const int gb = b.second.orientable ? 2 * b.second.genus : b.second.genus;
        s = u(ga + gb);
      }
      add(an + "#" + bn, connected_sum(a.first, b.first), s);
    }
  }

  const std::vector<std::pair<std::string, SurfaceClass>> words = {
      {"aa", u(1)},
      {"abab", u(1)},
      {"aabb", u(2)},
      {"aba^-1b^-1", sigma(1)},
      {"abab^-1", u(2)},
      {"aabbcc", u(3)},
      {"a1b1a1^-1b1^-1a2b2a2^-1b2^-1", sigma(2)}};
  for (const auto& [w, s] : words) add("scheme " + w, scheme_to_complex(parse_word(w)), s);
  return out;
}

/// The corpus plus one barycentric subdivision of every member.
inline std::vector<Sample> corpus_with_subdivisions() {
  auto base = corpus();
  std::vector<Sample> out = base;
  for (const auto& s : base) {
    out.push_back({"b(" + s.name + ")", barycentric_subdivision(s.complex), s.expected});
  }
  return out;
}

}  // namespace surftopo::testing
