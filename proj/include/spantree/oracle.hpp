#pragma once

#include <utility>
#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"

namespace spantree {

// One spanning tree of a multigraph.  Parallel copies of an edge are
// distinct here: (key, copy_index) with copy_index < multiplicity(key).
// Edges are kept in ascending (key, copy) order.
struct SpanningTree {
  std::vector<std::pair<EdgeKey, int>> edges;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

namespace detail {

inline constexpr long long kEnumerationGuard = 24;

struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // False when x and y were already in the same component.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

} // namespace detail

// Brute-force reference: every (V-1)-subset of edge copies that forms a
// spanning tree, in lexicographic order over the expanded copy list.
// Loops are never part of a tree.  Guarded to small inputs.
inline std::vector<SpanningTree> enumerate_spanning_trees(const Multigraph& g) {
  if (g.edge_count() > detail::kEnumerationGuard)
    throw TooLargeError("enumeration guard: more than " +
                        std::to_string(detail::kEnumerationGuard) + " edge copies");

  std::vector<std::pair<EdgeKey, int>> copies;
  for (const auto& [key, mult] : g.edges()) {
    if (key.is_loop()) continue;
    for (int c = 0; c < mult; ++c) copies.emplace_back(key, c);
  }

  const int need = g.vertex_count() - 1;
  std::vector<SpanningTree> trees;
  std::vector<std::pair<EdgeKey, int>> chosen;

  auto search = [&](auto&& self, std::size_t next, int picked,
                    const detail::DisjointSet& dsu) -> void {
    if (picked == need) {
      trees.push_back(SpanningTree{chosen});
      return;
    }
    if (copies.size() - next < static_cast<std::size_t>(need - picked)) return;
    // include copies[next] unless it would close a cycle
    detail::DisjointSet with = dsu;
    if (with.unite(copies[next].first.u, copies[next].first.v)) {
      chosen.push_back(copies[next]);
      self(self, next + 1, picked + 1, with);
      chosen.pop_back();
    }
    self(self, next + 1, picked, dsu);
  };
  search(search, 0, 0, detail::DisjointSet(g.vertex_count()));
  return trees;
}

inline BigInt count_trees_bruteforce(const Multigraph& g) {
  return BigInt(enumerate_spanning_trees(g).size());
}

// Number of vertex colorings in `colors` colors with the endpoints of every
// edge colored differently.  A loop forces 0.  Guarded to small inputs.
inline BigInt count_colorings_bruteforce(const Multigraph& g, int colors) {
  if (colors < 0) throw std::invalid_argument("color count must be nonnegative");
  if (g.vertex_count() > 8 || colors > 6)
    throw TooLargeError("coloring guard: at most 8 vertices and 6 colors");

  const int n = g.vertex_count();
  if (colors == 0) return 0;

  std::vector<int> color(n, 0);
  BigInt proper = 0;
  for (;;) {
    bool ok = true;
    for (const auto& [key, mult] : g.edges()) {
      if (color[key.u] == color[key.v]) {
        ok = false;
        break;
      }
    }
    if (ok) ++proper;
    int pos = 0;
    while (pos < n && ++color[pos] == colors) color[pos++] = 0;
    if (pos == n) break;
  }
  return proper;
}

} // namespace spantree
