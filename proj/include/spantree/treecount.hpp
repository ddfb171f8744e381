#pragma once

#include <utility>

#include "spantree/matrix_tree.hpp"
#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"
#include "spantree/oracle.hpp"

namespace spantree {

enum class Algorithm { Auto, DeletionContraction, MatrixTree, Enumeration };

// Observability counters for the deletion-contraction recursion.
struct CountStats {
  long long recursion_nodes = 0;
  long long loop_reductions = 0;   // loop copies removed
  long long leaf_reductions = 0;   // degree-1 vertices pruned
  long long bridge_reductions = 0; // island factorizations

  CountStats& operator+=(const CountStats& o) {
    recursion_nodes += o.recursion_nodes;
    loop_reductions += o.loop_reductions;
    leaf_reductions += o.leaf_reductions;
    bridge_reductions += o.bridge_reductions;
    return *this;
  }
};

namespace detail {

// Pivot for the recursion: the lexicographically smallest edge among those
// of maximal multiplicity.  High multiplicity first collapses parallel
// copies quickly; the tie-break keeps traces deterministic.
inline EdgeKey pick_pivot(const Multigraph& g) {
  const EdgeKey* best = nullptr;
  long long best_mult = 0;
  for (const auto& [key, mult] : g.edges()) {
    if (key.is_loop()) continue;
    if (mult > best_mult) {
      best = &key;
      best_mult = mult;
    }
  }
  return *best;
}

inline BigInt tau_dc_impl(const Multigraph& g, CountStats& stats) {
  ++stats.recursion_nodes;
  if (!g.is_connected()) return 0;

  Multigraph reduced = g.strip_loops();
  stats.loop_reductions += g.edge_count() - reduced.edge_count();

  auto [pruned, leaf_count] = reduced.prune_leaves();
  stats.leaf_reductions += leaf_count;

  if (pruned.vertex_count() <= 1) return 1;

  auto cut_edges = pruned.bridges();
  if (!cut_edges.empty()) {
    ++stats.bridge_reductions;
    auto [left, right] = pruned.split_at_bridge(cut_edges.front());
    return tau_dc_impl(left, stats) * tau_dc_impl(right, stats);
  }

  EdgeKey pivot = pick_pivot(pruned);
  return tau_dc_impl(pruned.delete_edge(pivot), stats) +
         tau_dc_impl(pruned.contract_edge(pivot), stats);
}

} // namespace detail

// Spanning tree count by deletion plus contraction:
//   tau(G) = tau(G minus an edge) + tau(G with that edge contracted)
// with loop stripping, leaf pruning and bridge factorization applied at
// every node.  Disconnected graphs count 0; a single vertex counts 1.
inline std::pair<BigInt, CountStats> tau_dc(const Multigraph& g) {
  CountStats stats;
  BigInt count = detail::tau_dc_impl(g, stats);
  return {std::move(count), stats};
}

// Concrete algorithm the dispatcher picks for Auto: enumeration for tiny
// edge counts, deletion-contraction while the cycle space stays small,
// matrix-tree otherwise.
inline Algorithm select_algorithm(const Multigraph& g) {
  if (g.edge_count() <= 12) return Algorithm::Enumeration;
  if (g.is_connected() && g.first_betti() <= 10) return Algorithm::DeletionContraction;
  return Algorithm::MatrixTree;
}

// Dispatcher over the three counting routes; all of them agree exactly.
inline BigInt tau(const Multigraph& g, Algorithm algorithm = Algorithm::Auto) {
  if (algorithm == Algorithm::Auto) algorithm = select_algorithm(g);
  switch (algorithm) {
    case Algorithm::Enumeration:
      return count_trees_bruteforce(g);
    case Algorithm::DeletionContraction:
      return tau_dc(g).first;
    case Algorithm::MatrixTree:
    default:
      return tau_mt(g);
  }
}

// tau over a bridge factors into the product of the two island counts.
inline BigInt tau_bridge_product(const Multigraph& g, EdgeKey bridge) {
  auto [left, right] = g.split_at_bridge(bridge);
  return tau(left) * tau(right);
}

} // namespace spantree
