#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "spantree/matrix_tree.hpp"
#include "spantree/oracle.hpp"
#include "test_support.hpp"

using namespace spantree;
using testsupport::tau5_example;

namespace {

// Fixture matrices for the loop-free tau=5 example.
const IntMatrix kAdjacency{{0, 1, 0, 0}, {1, 0, 1, 2}, {0, 1, 0, 1}, {0, 2, 1, 0}};
const IntMatrix kLaplacian{{1, -1, 0, 0}, {-1, 4, -1, -2}, {0, -1, 2, -1}, {0, -2, -1, 3}};
const IntMatrix kMinor{{1, -1, 0}, {-1, 4, -1}, {0, -1, 2}};

IntMatrix random_matrix(std::mt19937& rng, int order) {
  IntMatrix m(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      m(i, j) = static_cast<long long>(rng() % 19) - 9;
  return m;
}

Multigraph random_permutation_of(const Multigraph& g, std::mt19937& rng) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Multigraph out(g.vertex_count());
  for (const auto& [key, mult] : g.edges())
    out = out.add_edge(perm[key.u], perm[key.v], mult);
  return out;
}

} // namespace

TEST_CASE("adjacency matrix", "[matrixtree]") {
  Multigraph stripped = tau5_example().strip_loops();
  CHECK(adjacency_matrix(stripped) == kAdjacency);

  // loops sit on the diagonal as their multiplicity
  IntMatrix with_loop = adjacency_matrix(tau5_example());
  CHECK(with_loop(2, 2) == 1);
  CHECK(with_loop(1, 3) == 2);

  CHECK(adjacency_matrix(Multigraph(3)) == IntMatrix(3));
  CHECK(adjacency_matrix(Multigraph(2).add_edge(0, 1, 2)) ==
        IntMatrix{{0, 2}, {2, 0}});
}

TEST_CASE("laplacian", "[matrixtree]") {
  Multigraph stripped = tau5_example().strip_loops();
  IntMatrix lap = laplacian(stripped);
  CHECK(lap == kLaplacian);

  // all row and column sums vanish
  for (int i = 0; i < lap.order(); ++i) {
    BigInt row = 0, col = 0;
    for (int j = 0; j < lap.order(); ++j) {
      row += lap(i, j);
      col += lap(j, i);
    }
    CHECK(row == 0);
    CHECK(col == 0);
  }

  CHECK(laplacian(Multigraph(2).add_edge(0, 1)) == IntMatrix{{1, -1}, {-1, 1}});
  CHECK(laplacian(Multigraph(3)) == IntMatrix(3));
  CHECK_THROWS_AS(laplacian(tau5_example()), std::invalid_argument);
}

TEST_CASE("kirchhoff minor", "[matrixtree]") {
  Multigraph stripped = tau5_example().strip_loops();
  KirchhoffMinor k = kirchhoff_minor(stripped, 3);
  CHECK(k.matrix == kMinor);
  CHECK(k.removed_vertex == 3);

  CHECK(kirchhoff_minor(Multigraph(2).add_edge(0, 1), 1).matrix == IntMatrix{{1}});
  CHECK(kirchhoff_minor(testsupport::triangle(), 2).matrix ==
        IntMatrix{{2, -1}, {-1, 2}});
  CHECK_THROWS_AS(kirchhoff_minor(Multigraph(1), 0), std::invalid_argument);
}

TEST_CASE("determinant fixtures", "[matrixtree]") {
  for (int n = 0; n <= 8; ++n) CHECK(det(IntMatrix::identity(n)) == 1);

  CHECK(det(IntMatrix{{4, -1, -1, -1},
                      {-1, 4, -1, -1},
                      {-1, -1, 4, -1},
                      {-1, -1, -1, 4}}) == 125);
  CHECK(det(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(det(kMinor) == 5);

  // singular inputs
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det(IntMatrix{{0, 0}, {1, 1}}) == 0);
  // zero leading pivot forces a row swap
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("determinant matches the six-term formula exhaustively",
          "[matrixtree][oracle]") {
  long long e[9];
  for (auto& x : e) x = -3;
  IntMatrix m(3);
  long long mismatches = 0;
  for (;;) {
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = e[i];
    if (det(m) != testsupport::det3_explicit(e)) ++mismatches;
    int pos = 0;
    while (pos < 9 && ++e[pos] == 4) e[pos++] = -3;
    if (pos == 9) break;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("determinant row operations", "[matrixtree][property]") {
  std::mt19937 rng(7201);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntMatrix m = random_matrix(rng, n);
    BigInt d = det(m);

    if (n >= 2) {
      int r1 = static_cast<int>(rng() % n);
      int r2 = static_cast<int>((r1 + 1 + rng() % (n - 1)) % n);

      IntMatrix swapped = m;
      for (int j = 0; j < n; ++j) std::swap(swapped(r1, j), swapped(r2, j));
      CHECK(det(swapped) == -d);

      IntMatrix added = m;
      for (int j = 0; j < n; ++j) added(r1, j) += m(r2, j);
      CHECK(det(added) == d);
    }

    long long lambda = static_cast<long long>(rng() % 9) - 4;
    IntMatrix scaled = m;
    int row = static_cast<int>(rng() % n);
    for (int j = 0; j < n; ++j) scaled(row, j) *= lambda;
    CHECK(det(scaled) == lambda * d);
  }
}

TEST_CASE("tau via the matrix formula", "[matrixtree]") {
  CHECK(tau_mt(tau5_example()) == 5);
  CHECK(tau_mt(Multigraph(2)) == 0);
  CHECK(tau_mt(Multigraph(1)) == 1);
  CHECK(tau_mt(Multigraph(1).add_edge(0, 0)) == 1);

  // complete graph on 5 vertices reproduces the 5^3 determinant
  Multigraph k5(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5 = k5.add_edge(i, j);
  CHECK(tau_mt(k5) == 125);
}

TEST_CASE("tau_mt is independent of the removed vertex and of labeling",
          "[matrixtree][property]") {
  std::mt19937 rng(7202);
  for (const Multigraph& g : testsupport::corpus(7203, 120)) {
    Multigraph stripped = g.strip_loops();
    BigInt reference = tau_mt(g);
    if (stripped.vertex_count() >= 2)
      for (VertexId removed = 0; removed < stripped.vertex_count(); ++removed)
        CHECK(det(kirchhoff_minor(stripped, removed).matrix) == reference);
    CHECK(tau_mt(random_permutation_of(g, rng)) == reference);
  }
}

TEST_CASE("minor determinant splits along the first vertex's degree",
          "[matrixtree][property]") {
  // When vertex 0 is adjacent to the removed vertex,
  // det K = det K(top-left decremented) + det K(first row and column gone):
  // the two sides are the deletion and the contraction of a connecting edge.
  int checked = 0;
  for (const Multigraph& g : testsupport::corpus(7204, 400)) {
    Multigraph s = g.strip_loops();
    int n = s.vertex_count();
    if (n < 2 || s.multiplicity(EdgeKey(0, n - 1)) < 1) continue;
    ++checked;

    IntMatrix k = kirchhoff_minor(s, n - 1).matrix;
    IntMatrix decremented = k;
    decremented(0, 0) -= 1;
    IntMatrix dropped(k.order() - 1);
    for (int i = 1; i < k.order(); ++i)
      for (int j = 1; j < k.order(); ++j) dropped(i - 1, j - 1) = k(i, j);
    CHECK(det(k) == det(decremented) + det(dropped));
  }
  CHECK(checked > 50);
}

TEST_CASE("tau_mt agrees with enumeration", "[matrixtree][property]") {
  for (const Multigraph& g : testsupport::corpus(7205, 200))
    CHECK(tau_mt(g) == count_trees_bruteforce(g));
}
