#pragma once

/**
 * Integral simplicial homology of 2-dimensional complexes.
 *
 * Every simplex is oriented by increasing vertex id. Boundary matrices use
 * the canonical (sorted) simplex order of the complex as their bases, and
 * ranks and torsion come from the Smith normal form over exact integers.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surftopo/complex.hpp"

namespace surftopo {

using BigInt = boost::multiprecision::cpp_int;

/// Dense exact-integer matrix in row-major order.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<BigInt>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) != 0) out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SNFResult {
  std::vector<BigInt> diagonal;  // d1 | d2 | ... | dr, all positive
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

inline const BigInt* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

inline void add_entry(SparseRow& row, std::size_t col, const BigInt& delta) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != row.end() && it->first == col) {
    it->second += delta;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {col, delta});
  }
}

// target -= q * source
inline void subtract_multiple(SparseRow& target, const SparseRow& source, const BigInt& q) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -q * b->second);
      ++b;
    } else {
      BigInt v = a->second - q * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

/// Reduces to a diagonal by unimodular row and column operations, pivoting
/// on the nonzero entry of least absolute value (ties: lowest row, then
/// column). Returns the diagonal in pivot order, not yet a divisibility chain.
inline std::vector<BigInt> diagonalize(std::vector<SparseRow> rows, std::size_t cols) {
  std::vector<BigInt> diag;
  std::vector<bool> live_row(rows.size(), true);
  std::size_t first_live = 0;
  // Rows that may hold an entry in each column; refreshed lazily.
  std::vector<std::vector<std::size_t>> col_rows(cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  }

  const auto rows_in_col = [&](std::size_t c) {
    auto& list = col_rows[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](std::size_t r) { return !live_row[r] || !find_entry(rows[r], c); });
    return list;
  };

  for (;;) {
    std::size_t pr = 0, pc = 0;
    const BigInt* best = nullptr;
    BigInt best_abs;
    bool unit = false;
    while (first_live < rows.size() && !live_row[first_live]) ++first_live;
    for (std::size_t r = first_live; r < rows.size() && !unit; ++r) {
      if (!live_row[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        if (v == 1 || v == -1) {
          best = &v;
          best_abs = 1;
          pr = r;
          pc = c;
          unit = true;
          break;
        }
        BigInt a = abs(v);
        if (!best || a < best_abs) {
          best = &v;
          best_abs = std::move(a);
          pr = r;
          pc = c;
        }
      }
    }
    if (!best) break;
    const BigInt p = *best;

    bool clean = true;
    // Clear column pc below and above the pivot.
    for (std::size_t r : rows_in_col(pc)) {
      if (r == pr) continue;
      const BigInt q = *find_entry(rows[r], pc) / p;
      if (q != 0) {
        subtract_multiple(rows[r], rows[pr], q);
        for (const auto& [c, v] : rows[pr]) col_rows[c].push_back(r);
      }
      if (find_entry(rows[r], pc)) clean = false;
    }
    // With column pc clear, column operations would touch only row pr, which
    // retires here; if p divides the rest of that row they are a no-op.
    if (clean && std::all_of(rows[pr].begin(), rows[pr].end(),
                             [&](const auto& e) { return e.second % p == 0; })) {
      diag.push_back(abs(p));
      live_row[pr] = false;
      continue;
    }
    // Clear row pr by column operations: col_j -= q * col_pc.
    const std::vector<std::size_t> pivot_col_rows = rows_in_col(pc);
    const SparseRow pivot_row = rows[pr];
    for (const auto& [c, v] : pivot_row) {
      if (c == pc) continue;
      const BigInt q = v / p;
      if (q != 0) {
        for (std::size_t r : pivot_col_rows) {
          add_entry(rows[r], c, -q * *find_entry(rows[r], pc));
          col_rows[c].push_back(r);
        }
      }
      if (find_entry(rows[pr], c)) clean = false;
    }
    if (clean) {
      diag.push_back(abs(p));
      live_row[pr] = false;
    }
  }
  return diag;
}

/// Smith normal form of a matrix given as sorted sparse rows.
inline SNFResult smith_normal_form(std::vector<SparseRow> rows, std::size_t cols) {
  const std::size_t nrows = rows.size();
  std::vector<BigInt> diag = diagonalize(std::move(rows), cols);

  // diag(a, b) ~ diag(gcd, lcm); sweeping all pairs yields a divisibility chain.
  std::vector<BigInt> units, chain;
  for (auto& d : diag) (d == 1 ? units : chain).push_back(std::move(d));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const BigInt g = gcd(chain[i], chain[j]);
      if (g == chain[i]) continue;
      chain[j] = chain[i] / g * chain[j];
      chain[i] = g;
    }
  }
  SNFResult out;
  out.rows = nrows;
  out.cols = cols;
  out.rank = units.size() + chain.size();
  out.diagonal = std::move(units);
  for (auto& d : chain) {
    if (d == 1) {
      out.diagonal.insert(out.diagonal.begin(), std::move(d));
    } else {
      out.diagonal.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace detail

/// Smith normal form diagonal of `m`.
inline SNFResult smith_normal_form(const IntegerMatrix& m) {
  std::vector<detail::SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) rows[r].emplace_back(c, m(r, c));
    }
  }
  return detail::smith_normal_form(std::move(rows), m.cols());
}

/// Boundary operators in the canonical bases of a complex.
struct ChainComplexData {
  IntegerMatrix d2;  // rows: edges, cols: triangles
  IntegerMatrix d1;  // rows: vertices, cols: edges
  std::vector<VertexId> vertex_basis;
  std::vector<Edge> edge_basis;
  std::vector<Triangle> triangle_basis;
};

inline ChainComplexData boundary_matrices(const SurfaceComplex& c) {
  ChainComplexData out;
  out.vertex_basis = c.vertices();
  out.edge_basis = c.edges();
  out.triangle_basis = c.triangles();
  out.d2 = IntegerMatrix(c.edges().size(), c.triangles().size());
  out.d1 = IntegerMatrix(c.vertices().size(), c.edges().size());
  for (std::size_t j = 0; j < c.triangles().size(); ++j) {
    const Triangle& t = c.triangles()[j];
    for (const Edge& e : t.edges()) out.d2(*c.edge_index(e), j) = t.incidence(e);
  }
  for (std::size_t j = 0; j < c.edges().size(); ++j) {
    const Edge& e = c.edges()[j];
    out.d1(*c.vertex_index(e.second), j) = 1;
    out.d1(*c.vertex_index(e.first), j) = -1;
  }
  return out;
}

/// Finitely generated abelian group: Z^betti plus Z/t for each torsion entry.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

/// `Z^b + Z/d1 + ...`, or `0` for the trivial group.
inline std::string to_string(const HomologyGroup& h) {
  if (h.is_trivial()) return "0";
  std::string s;
  if (h.betti > 0) s = "Z^" + std::to_string(h.betti);
  for (const auto& t : h.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s;
}

/// Group presented by generators with the columns of `relations` as relators
/// (cokernel of a matrix with one row per generator).
inline HomologyGroup cokernel(const IntegerMatrix& relations) {
  const SNFResult snf = smith_normal_form(relations);
  HomologyGroup h;
  h.betti = relations.rows() - snf.rank;
  for (const auto& d : snf.diagonal) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

struct Homology {
  HomologyGroup h0, h1, h2;

  bool operator==(const Homology&) const = default;
};

inline Homology homology_groups(const SurfaceComplex& c) {
  // Same operators as boundary_matrices, built sparse: the dense form is
  // mostly zeros for anything beyond a few hundred simplices.
  std::vector<detail::SparseRow> d2(c.edges().size()), d1(c.vertices().size());
  for (std::size_t j = 0; j < c.triangles().size(); ++j) {
    const Triangle& t = c.triangles()[j];
    for (const Edge& e : t.edges()) d2[*c.edge_index(e)].emplace_back(j, t.incidence(e));
  }
  for (std::size_t j = 0; j < c.edges().size(); ++j) {
    const Edge& e = c.edges()[j];
    d1[*c.vertex_index(e.second)].emplace_back(j, 1);
    d1[*c.vertex_index(e.first)].emplace_back(j, -1);
  }
  const SNFResult s1 = detail::smith_normal_form(std::move(d1), c.edges().size());
  const SNFResult s2 = detail::smith_normal_form(std::move(d2), c.triangles().size());
  Homology h;
  h.h0.betti = c.vertices().size() - s1.rank;
  h.h1.betti = c.edges().size() - s1.rank - s2.rank;
  for (const auto& d : s2.diagonal) {
    if (d > 1) h.h1.torsion.push_back(d);
  }
  h.h2.betti = c.triangles().size() - s2.rank;
  return h;
}

inline long long euler_from_homology(const Homology& h) {
  return static_cast<long long>(h.h0.betti) - static_cast<long long>(h.h1.betti) +
         static_cast<long long>(h.h2.betti);
}

}  // namespace surftopo
