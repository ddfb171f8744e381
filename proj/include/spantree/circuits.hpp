#pragma once

#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"
#include "spantree/oracle.hpp"

namespace spantree {

// One copy of an edge with a chosen direction.  The canonical direction is
// low index to high index; `reversed` flips it.
struct OrientedEdge {
  EdgeKey key;
  int copy_index = 0;
  bool reversed = false;

  VertexId tail() const { return reversed ? key.v : key.u; }
  VertexId head() const { return reversed ? key.u : key.v; }

  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

// Spanning trees split by how the unique source-to-sink tree path uses a
// chosen oriented edge: along it, against it, or not at all.
struct TreeTally {
  BigInt tau_plus = 0;
  BigInt tau_minus = 0;
  BigInt tau_zero = 0;

  BigInt total() const { return tau_plus + tau_minus + tau_zero; }
};

// Exact currents of a unit-resistance network: each edge copy carries
//   (tau_plus - tau_minus) / tau  of the total current
// for its canonical orientation; loops carry 0.
struct CircuitSolution {
  VertexId source = 0;
  VertexId sink = 0;
  Rational total_current;
  std::map<OrientedEdge, Rational> currents;
};

namespace detail {

// Steps of the unique a-to-b path inside a spanning tree, as
// (from, to, copy) triples.
struct PathStep {
  VertexId from;
  VertexId to;
  EdgeKey key;
  int copy_index;
};

inline std::vector<PathStep> tree_path(const SpanningTree& tree, int vertex_count,
                                       VertexId a, VertexId b) {
  struct Hop {
    VertexId to;
    EdgeKey key;
    int copy_index;
  };
  std::vector<std::vector<Hop>> adj(vertex_count);
  for (const auto& [key, copy] : tree.edges) {
    adj[key.u].push_back({key.v, key, copy});
    adj[key.v].push_back({key.u, key, copy});
  }
  std::vector<int> parent(vertex_count, -1);
  std::vector<Hop> via(vertex_count, Hop{-1, EdgeKey(0, 0), 0});
  std::queue<VertexId> frontier;
  frontier.push(a);
  parent[a] = a;
  while (!frontier.empty()) {
    VertexId x = frontier.front();
    frontier.pop();
    for (const Hop& hop : adj[x]) {
      if (parent[hop.to] >= 0) continue;
      parent[hop.to] = x;
      via[hop.to] = {x, hop.key, hop.copy_index};
      frontier.push(hop.to);
    }
  }
  std::vector<PathStep> path;
  for (VertexId x = b; x != a; x = parent[x])
    path.push_back({parent[x], x, via[x].key, via[x].copy_index});
  std::reverse(path.begin(), path.end());
  return path;
}

inline void check_terminals(const Multigraph& g, VertexId a, VertexId b) {
  if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
    throw std::invalid_argument("terminal vertex out of range");
  if (a == b) throw std::invalid_argument("source and sink must differ");
  if (!g.is_connected())
    throw NotConnectedError("circuit analysis requires a connected graph");
}

} // namespace detail

// Counts spanning trees by whether the a-to-b tree path traverses rho
// forward, backward, or not at all.  Uses the enumeration oracle, so the
// enumeration guard applies.
inline TreeTally classify_trees(const Multigraph& g, OrientedEdge rho,
                                VertexId a, VertexId b) {
  detail::check_terminals(g, a, b);
  if (rho.key.is_loop())
    throw std::invalid_argument("cannot classify trees around a loop");
  if (rho.copy_index < 0 || rho.copy_index >= g.multiplicity(rho.key))
    throw MissingEdgeError("no such edge copy");

  TreeTally tally;
  for (const SpanningTree& tree : enumerate_spanning_trees(g)) {
    bool used = false;
    for (const auto& step : detail::tree_path(tree, g.vertex_count(), a, b)) {
      if (step.key != rho.key || step.copy_index != rho.copy_index) continue;
      used = true;
      if (step.from == rho.tail())
        ++tally.tau_plus;
      else
        ++tally.tau_minus;
      break;
    }
    if (!used) ++tally.tau_zero;
  }
  return tally;
}

// Exact branch currents for total current `total` driven from a to b.
inline CircuitSolution edge_currents(const Multigraph& g, VertexId a, VertexId b,
                                     const Rational& total) {
  detail::check_terminals(g, a, b);

  auto trees = enumerate_spanning_trees(g);
  BigInt tau_g(trees.size());

  // One pass over all trees tallies every copy at once.
  std::map<std::pair<EdgeKey, int>, std::pair<BigInt, BigInt>> tally;
  for (const SpanningTree& tree : trees) {
    for (const auto& step : detail::tree_path(tree, g.vertex_count(), a, b)) {
      auto& [forward, backward] = tally[{step.key, step.copy_index}];
      if (step.from == step.key.u)
        ++forward;
      else
        ++backward;
    }
  }

  CircuitSolution sol;
  sol.source = a;
  sol.sink = b;
  sol.total_current = total;
  for (const auto& [key, mult] : g.edges()) {
    for (int copy = 0; copy < mult; ++copy) {
      Rational current = 0;
      if (!key.is_loop()) {
        auto it = tally.find({key, copy});
        if (it != tally.end()) {
          const auto& [forward, backward] = it->second;
          current = Rational(forward - backward, tau_g) * total;
        }
      }
      sol.currents.emplace(OrientedEdge{key, copy, false}, std::move(current));
    }
  }
  return sol;
}

// Checks the two Kirchhoff laws with exact rational arithmetic:
//  - net current is zero at every vertex except +total at the source and
//    -total at the sink;
//  - the signed current sum around every fundamental cycle of a spanning
//    forest is zero (unit resistances, so current equals voltage drop).
inline bool verify_kirchhoff(const Multigraph& g, const CircuitSolution& sol) {
  // The solution must cover exactly the edge copies of g, canonically
  // oriented.
  long long copies = 0;
  for (const auto& [key, mult] : g.edges()) {
    for (int copy = 0; copy < mult; ++copy) {
      if (!sol.currents.contains(OrientedEdge{key, copy, false}))
        throw std::invalid_argument("solution does not match the graph's edges");
      ++copies;
    }
  }
  if (copies != static_cast<long long>(sol.currents.size()))
    throw std::invalid_argument("solution does not match the graph's edges");
  if (sol.source < 0 || sol.source >= g.vertex_count() || sol.sink < 0 ||
      sol.sink >= g.vertex_count())
    throw std::invalid_argument("solution terminals outside the graph");

  // Current law.
  std::vector<Rational> net_out(g.vertex_count(), Rational(0));
  for (const auto& [edge, current] : sol.currents) {
    net_out[edge.tail()] += current;
    net_out[edge.head()] -= current;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Rational expected = 0;
    if (v == sol.source) expected = sol.total_current;
    if (v == sol.sink) expected = -sol.total_current;
    if (net_out[v] != expected) return false;
  }

  // Voltage law over the fundamental cycles of a breadth-first spanning
  // forest: the cycles of non-forest copies span the whole cycle space.
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<EdgeKey> parent_key(g.vertex_count(), EdgeKey(0, 0));
  std::set<std::pair<EdgeKey, int>> forest;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (parent[root] >= 0) continue;
    parent[root] = root;
    std::queue<VertexId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      VertexId x = frontier.front();
      frontier.pop();
      for (const auto& [key, mult] : g.edges()) {
        if (key.is_loop()) continue;
        VertexId other = key.u == x ? key.v : key.v == x ? key.u : -1;
        if (other < 0 || parent[other] >= 0) continue;
        parent[other] = x;
        parent_key[other] = key;
        forest.insert({key, 0});
        frontier.push(other);
      }
    }
  }

  // Signed current picked up walking from x toward the forest root.
  auto walk_to_root = [&](VertexId x) {
    Rational sum = 0;
    while (parent[x] != x) {
      EdgeKey key = parent_key[x];
      bool along = key.u == x; // step x -> parent follows u -> v
      const Rational& current = sol.currents.at(OrientedEdge{key, 0, false});
      sum += along ? current : -current;
      x = parent[x];
    }
    return sum;
  };

  for (const auto& [edge, current] : sol.currents) {
    if (forest.contains({edge.key, edge.copy_index})) continue;
    if (edge.key.is_loop()) {
      if (current != 0) return false;
      continue;
    }
    // Cycle: u -> v along the copy, then v back to u through the forest.
    // Path v..root..u = (v..root) - (u..root); shared segments cancel.
    Rational sum = current + walk_to_root(edge.key.v) - walk_to_root(edge.key.u);
    if (sum != 0) return false;
  }
  return true;
}

} // namespace spantree
