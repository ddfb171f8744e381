#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"

namespace spantree {

/// Dense square matrix of exact integers.
class IntMatrix {
public:
  explicit IntMatrix(int order) : order_(order), entries_(order * order) {
    if (order < 0) throw std::invalid_argument("matrix order must be nonnegative");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : IntMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
      if (row.size() != rows.size())
        throw std::invalid_argument("matrix rows must form a square");
      int j = 0;
      for (long long x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static IntMatrix identity(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i) m(i, i) = 1;
    return m;
  }

  int order() const { return order_; }

  BigInt& operator()(int i, int j) { return entries_[i * order_ + j]; }
  const BigInt& operator()(int i, int j) const { return entries_[i * order_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int order_;
  std::vector<BigInt> entries_;
};

// Entry (i,j) is the multiplicity between vertices i and j; loop
// multiplicity sits on the diagonal, so the matrix round-trips the graph.
inline IntMatrix adjacency_matrix(const Multigraph& g) {
  IntMatrix a(g.vertex_count());
  for (const auto& [key, mult] : g.edges()) {
    a(key.u, key.v) += mult;
    if (!key.is_loop()) a(key.v, key.u) += mult;
  }
  return a;
}

// Degree matrix minus adjacency matrix.  All row and column sums are zero.
// The input must be loop-free (strip_loops first).
inline IntMatrix laplacian(const Multigraph& g) {
  for (const auto& [key, mult] : g.edges())
    if (key.is_loop())
      throw std::invalid_argument("laplacian requires a loop-free graph; strip loops first");
  IntMatrix m(g.vertex_count());
  for (const auto& [key, mult] : g.edges()) {
    m(key.u, key.v) -= mult;
    m(key.v, key.u) -= mult;
    m(key.u, key.u) += mult;
    m(key.v, key.v) += mult;
  }
  return m;
}

// Laplacian with one row and the matching column removed.  Its determinant
// is the spanning tree count, independent of which vertex is removed.
struct KirchhoffMinor {
  IntMatrix matrix;
  VertexId removed_vertex;
};

inline KirchhoffMinor kirchhoff_minor(const Multigraph& g, VertexId removed) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("Kirchhoff minor requires at least two vertices");
  if (removed < 0 || removed >= g.vertex_count())
    throw std::invalid_argument("removed vertex out of range");
  IntMatrix full = laplacian(g);
  IntMatrix minor(g.vertex_count() - 1);
  for (int i = 0, mi = 0; i < g.vertex_count(); ++i) {
    if (i == removed) continue;
    for (int j = 0, mj = 0; j < g.vertex_count(); ++j) {
      if (j == removed) continue;
      minor(mi, mj++) = full(i, j);
    }
    ++mi;
  }
  return {std::move(minor), removed};
}

// Exact determinant by fraction-free (Bareiss) elimination: every division
// is exact, so all intermediates stay integers of polynomially bounded
// size.  A zero pivot is repaired by a row swap with sign bookkeeping; an
// all-zero pivot column means the determinant is 0.  The 0x0 determinant
// is 1.
inline BigInt det(const IntMatrix& m) {
  const int n = m.order();
  if (n == 0) return 1;

  IntMatrix a = m;
  BigInt previous_pivot = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n && swap_row < 0; ++r)
        if (a(r, k) != 0) swap_row = r;
      if (swap_row < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous_pivot;
    previous_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Spanning tree count via the Kirchhoff minor determinant.  Disconnected
// graphs yield 0; the single-vertex graph yields 1.
inline BigInt tau_mt(const Multigraph& g) {
  Multigraph stripped = g.strip_loops();
  if (stripped.vertex_count() == 1) return 1;
  return det(kirchhoff_minor(stripped, stripped.vertex_count() - 1).matrix);
}

} // namespace spantree
