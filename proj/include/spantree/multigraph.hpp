#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spantree {

using VertexId = int;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deleting an edge that is not present.
struct MissingEdgeError : GraphError {
  using GraphError::GraphError;
};

// An operation that requires a connected graph got a disconnected one.
struct NotConnectedError : GraphError {
  using GraphError::GraphError;
};

// A brute-force guard was exceeded.
struct TooLargeError : GraphError {
  using GraphError::GraphError;
};

// Undirected vertex pair, stored normalized with u <= v.  u == v is a loop.
struct EdgeKey {
  VertexId u;
  VertexId v;

  EdgeKey(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool is_loop() const { return u == v; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Undirected multigraph: a vertex count plus a multiplicity per vertex pair.
/// Parallel edges and loops are allowed; a loop adds 2 to its vertex degree.
///
/// Values are immutable: every structural operation returns a new graph, so
/// recursions that branch on both children can share inputs freely.
class Multigraph {
public:
  explicit Multigraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 1)
      throw std::invalid_argument("multigraph needs at least one vertex");
  }

  int vertex_count() const { return n_; }

  const std::map<EdgeKey, long long>& edges() const { return edges_; }

  // Multiplicity of the pair {u,v}; 0 when absent.
  long long multiplicity(EdgeKey e) const {
    auto it = edges_.find(e);
    return it == edges_.end() ? 0 : it->second;
  }

  // Total edge count, i.e. the sum of all multiplicities (loops included).
  long long edge_count() const {
    long long total = 0;
    for (const auto& [key, mult] : edges_) total += mult;
    return total;
  }

  long long degree(VertexId v) const {
    check_vertex(v);
    long long d = 0;
    for (const auto& [key, mult] : edges_) {
      if (key.is_loop()) {
        if (key.u == v) d += 2 * mult;
      } else if (key.u == v || key.v == v) {
        d += mult;
      }
    }
    return d;
  }

  Multigraph add_edge(VertexId u, VertexId v, long long mult = 1) const {
    check_vertex(u);
    check_vertex(v);
    if (mult < 1) throw std::invalid_argument("edge multiplicity must be positive");
    Multigraph out = *this;
    out.edges_[EdgeKey(u, v)] += mult;
    return out;
  }

  // True iff every vertex is reachable from vertex 0.  The single-vertex
  // graph is connected.
  bool is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    auto adj = adjacency();
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }

  // Removes exactly one copy of e; the vertex set is unchanged.
  Multigraph delete_edge(EdgeKey e) const {
    auto it = edges_.find(e);
    if (it == edges_.end())
      throw MissingEdgeError("no edge " + describe(e) + " to delete");
    Multigraph out = *this;
    auto out_it = out.edges_.find(e);
    if (--out_it->second == 0) out.edges_.erase(out_it);
    return out;
  }

  // Removes one copy of e and merges its endpoints.  The smaller index
  // survives, vertices above the larger index shift down by one, and
  // remaining parallel copies of e become loops at the survivor.
  Multigraph contract_edge(EdgeKey e) const {
    if (e.is_loop())
      throw std::invalid_argument("cannot contract a loop");
    auto it = edges_.find(e);
    if (it == edges_.end())
      throw MissingEdgeError("no edge " + describe(e) + " to contract");

    auto remap = [&](VertexId x) {
      if (x == e.v) return e.u;
      return x > e.v ? x - 1 : x;
    };
    Multigraph out(n_ - 1);
    for (const auto& [key, mult] : edges_) {
      long long m = key == e ? mult - 1 : mult;
      if (m > 0) out.edges_[EdgeKey(remap(key.u), remap(key.v))] += m;
    }
    return out;
  }

  // Removes all loops.  Spanning trees never contain loops, so tau is
  // unchanged.
  Multigraph strip_loops() const {
    Multigraph out(n_);
    for (const auto& [key, mult] : edges_)
      if (!key.is_loop()) out.edges_.emplace(key, mult);
    return out;
  }

  // Repeatedly removes degree-1 vertices together with their single edge
  // until none remain.  Returns the reduced graph and the number of
  // vertices removed.  Tau is unchanged.
  std::pair<Multigraph, int> prune_leaves() const {
    Multigraph g = *this;
    int pruned = 0;
    for (;;) {
      VertexId leaf = -1;
      for (VertexId v = 0; v < g.n_ && leaf < 0; ++v)
        if (g.degree(v) == 1) leaf = v;
      if (leaf < 0) break;
      g = g.remove_vertex(leaf);
      ++pruned;
    }
    return {g, pruned};
  }

  // The edges whose deletion disconnects the graph, in ascending key order.
  // Loops and parallel pairs are never bridges.  Requires a connected graph.
  std::vector<EdgeKey> bridges() const {
    if (!is_connected())
      throw NotConnectedError("bridges require a connected graph");

    auto adj = keyed_adjacency();
    std::vector<int> disc(n_, -1), low(n_, 0);
    std::vector<EdgeKey> found;
    int time = 0;
    // Lowlink search; a parallel copy of the tree edge acts as a back edge.
    auto dfs = [&](auto&& self, VertexId u, VertexId parent,
                   const EdgeKey* parent_key) -> void {
      disc[u] = low[u] = time++;
      for (const auto& [w, key] : adj[u]) {
        if (parent_key && w == parent && key == *parent_key) {
          if (multiplicity(key) >= 2) low[u] = std::min(low[u], disc[parent]);
          continue;
        }
        if (disc[w] >= 0) {
          low[u] = std::min(low[u], disc[w]);
        } else {
          self(self, w, u, &key);
          low[u] = std::min(low[u], low[w]);
          if (low[w] > disc[u]) found.push_back(key);
        }
      }
    };
    dfs(dfs, 0, -1, nullptr);
    std::sort(found.begin(), found.end());
    return found;
  }

  // Splits a connected graph at a bridge into its two islands, each with
  // compacted vertex indices.  The island containing the lower endpoint of
  // the bridge comes first.
  std::pair<Multigraph, Multigraph> split_at_bridge(EdgeKey e) const {
    auto bs = bridges();
    if (!std::binary_search(bs.begin(), bs.end(), e))
      throw std::invalid_argument("edge " + describe(e) + " is not a bridge");

    Multigraph cut = delete_edge(e);
    std::vector<char> side_of_u(n_, 0);
    auto adj = cut.adjacency();
    std::vector<VertexId> stack{e.u};
    side_of_u[e.u] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId w : adj[x])
        if (!side_of_u[w]) {
          side_of_u[w] = 1;
          stack.push_back(w);
        }
    }
    return {cut.induced(side_of_u, 1), cut.induced(side_of_u, 0)};
  }

  // E - V + 1 for a connected graph: the number of independent cycles.
  long long first_betti() const {
    if (!is_connected())
      throw NotConnectedError("first Betti number requires a connected graph");
    return edge_count() - n_ + 1;
  }

  // Connected and acyclic, i.e. connected with exactly V - 1 edges.
  bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(n_) + ")");
  }

  static std::string describe(EdgeKey e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  }

  // Neighbor lists over distinct vertex pairs; loops are ignored.
  std::vector<std::vector<VertexId>> adjacency() const {
    std::vector<std::vector<VertexId>> adj(n_);
    for (const auto& [key, mult] : edges_) {
      if (key.is_loop()) continue;
      adj[key.u].push_back(key.v);
      adj[key.v].push_back(key.u);
    }
    return adj;
  }

  std::vector<std::vector<std::pair<VertexId, EdgeKey>>> keyed_adjacency() const {
    std::vector<std::vector<std::pair<VertexId, EdgeKey>>> adj(n_);
    for (const auto& [key, mult] : edges_) {
      if (key.is_loop()) continue;
      adj[key.u].emplace_back(key.v, key);
      adj[key.v].emplace_back(key.u, key);
    }
    return adj;
  }

  // Drops vertex v (which must have at most one incident edge copy) and
  // compacts indices.
  Multigraph remove_vertex(VertexId v) const {
    Multigraph out(n_ - 1);
    auto remap = [&](VertexId x) { return x > v ? x - 1 : x; };
    for (const auto& [key, mult] : edges_) {
      if (key.u == v || key.v == v) continue;
      out.edges_.emplace(EdgeKey(remap(key.u), remap(key.v)), mult);
    }
    return out;
  }

  // Subgraph induced by vertices with side_of_u[v] == side, compacted.
  Multigraph induced(const std::vector<char>& side_of_u, char side) const {
    std::vector<VertexId> remap(n_, -1);
    int count = 0;
    for (VertexId v = 0; v < n_; ++v)
      if (side_of_u[v] == side) remap[v] = count++;
    Multigraph out(count);
    for (const auto& [key, mult] : edges_)
      if (remap[key.u] >= 0 && remap[key.v] >= 0)
        out.edges_.emplace(EdgeKey(remap[key.u], remap[key.v]), mult);
    return out;
  }

  int n_;
  std::map<EdgeKey, long long> edges_;
};

} // namespace spantree
