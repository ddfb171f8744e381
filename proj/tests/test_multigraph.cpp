#include <catch2/catch_amalgamated.hpp>

#include "spantree/multigraph.hpp"
#include "spantree/oracle.hpp"
#include "test_support.hpp"

using namespace spantree;
using testsupport::tau5_example;

TEST_CASE("construction", "[multigraph]") {
  CHECK(Multigraph(1).vertex_count() == 1);
  CHECK(Multigraph(1).edge_count() == 0);
  CHECK(Multigraph(4).edge_count() == 0);
  CHECK_THROWS_AS(Multigraph(0), std::invalid_argument);
}

TEST_CASE("add_edge accumulates multiplicity", "[multigraph]") {
  Multigraph g = tau5_example();
  CHECK(g.multiplicity(EdgeKey(1, 3)) == 2);
  CHECK(g.multiplicity(EdgeKey(3, 1)) == 2); // keys normalize
  CHECK(g.multiplicity(EdgeKey(0, 3)) == 0);

  Multigraph h = Multigraph(2).add_edge(0, 1).add_edge(0, 1);
  CHECK(h.multiplicity(EdgeKey(0, 1)) == 2);

  CHECK_THROWS_AS(Multigraph(2).add_edge(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph(2).add_edge(0, 1, 0), std::invalid_argument);
}

TEST_CASE("degree counts loops twice", "[multigraph]") {
  Multigraph g = tau5_example();
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 4);
  CHECK(g.degree(2) == 4);
  CHECK(g.degree(3) == 3);

  CHECK(Multigraph(2).degree(1) == 0);
  CHECK(Multigraph(1).add_edge(0, 0).degree(0) == 2);
  CHECK_THROWS_AS(g.degree(7), std::invalid_argument);

  Multigraph loopy = Multigraph(3).add_edge(2, 2);
  CHECK(loopy.add_edge(2, 2).degree(2) == 4);
}

TEST_CASE("connectivity", "[multigraph]") {
  CHECK(tau5_example().is_connected());
  CHECK(Multigraph(1).is_connected());
  CHECK_FALSE(Multigraph(2).is_connected());
  CHECK_FALSE(Multigraph(3).add_edge(0, 1).is_connected());
  // a loop does not connect anything
  CHECK_FALSE(Multigraph(2).add_edge(0, 0).is_connected());
}

TEST_CASE("delete_edge removes exactly one copy", "[multigraph]") {
  Multigraph g = tau5_example();
  Multigraph h = g.delete_edge(EdgeKey(1, 3));
  CHECK(h.multiplicity(EdgeKey(1, 3)) == 1);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == g.edge_count() - 1);
  CHECK(g.multiplicity(EdgeKey(1, 3)) == 2); // input untouched

  Multigraph t = Multigraph(2).add_edge(0, 1);
  CHECK_FALSE(t.delete_edge(EdgeKey(0, 1)).is_connected());

  CHECK_THROWS_AS(g.delete_edge(EdgeKey(0, 3)), MissingEdgeError);
}

TEST_CASE("contract_edge merges endpoints", "[multigraph]") {
  SECTION("contracting 1-2 in the tau=5 example") {
    Multigraph h = tau5_example().contract_edge(EdgeKey(1, 2));
    REQUIRE(h.vertex_count() == 3);
    CHECK(h.multiplicity(EdgeKey(0, 1)) == 1);
    CHECK(h.multiplicity(EdgeKey(1, 2)) == 3); // parallel pair plus the old 2-3
    CHECK(h.multiplicity(EdgeKey(1, 1)) == 1); // the loop rides along
    // tau(G) = tau(G\e) + tau(G/e) = 5 forces tau = 3 here
    CHECK(count_trees_bruteforce(h) == 3);
  }
  SECTION("a remaining parallel copy becomes a loop") {
    Multigraph h = Multigraph(2).add_edge(0, 1, 2).contract_edge(EdgeKey(0, 1));
    REQUIRE(h.vertex_count() == 1);
    CHECK(h.multiplicity(EdgeKey(0, 0)) == 1);
  }
  SECTION("contracting the only edge of a 2-path") {
    Multigraph h = Multigraph(2).add_edge(0, 1).contract_edge(EdgeKey(0, 1));
    CHECK(h.vertex_count() == 1);
    CHECK(h.edge_count() == 0);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(Multigraph(1).add_edge(0, 0).contract_edge(EdgeKey(0, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Multigraph(3).contract_edge(EdgeKey(0, 1)), MissingEdgeError);
  }
}

TEST_CASE("strip_loops", "[multigraph]") {
  Multigraph g = tau5_example();
  Multigraph s = g.strip_loops();
  CHECK(s.edge_count() == 5);
  CHECK(s.multiplicity(EdgeKey(2, 2)) == 0);
  CHECK(count_trees_bruteforce(s) == count_trees_bruteforce(g));

  CHECK(s.strip_loops() == s);
  CHECK(Multigraph(1).add_edge(0, 0, 3).strip_loops() == Multigraph(1));
}

TEST_CASE("prune_leaves", "[multigraph]") {
  SECTION("removes the single pendant of the tau=5 example") {
    auto [g, pruned] = tau5_example().prune_leaves();
    CHECK(pruned == 1);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 5);
    CHECK(count_trees_bruteforce(g) == 5);
  }
  SECTION("a path collapses to a point") {
    auto [g, pruned] = testsupport::path(3).prune_leaves();
    CHECK(pruned == 2);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  SECTION("a cycle is untouched") {
    auto [g, pruned] = testsupport::cycle(4).prune_leaves();
    CHECK(pruned == 0);
    CHECK(g == testsupport::cycle(4));
  }
}

TEST_CASE("bridges", "[multigraph]") {
  CHECK(tau5_example().bridges() == std::vector<EdgeKey>{EdgeKey(0, 1)});
  CHECK(testsupport::cycle(5).bridges().empty());
  CHECK(testsupport::path(3).bridges() ==
        std::vector<EdgeKey>{EdgeKey(0, 1), EdgeKey(1, 2)});
  CHECK_THROWS_AS(Multigraph(2).bridges(), NotConnectedError);
}

TEST_CASE("bridges agree with the deletion oracle", "[multigraph][property]") {
  std::mt19937 rng(7001);
  int connected_seen = 0;
  while (connected_seen < 100) {
    Multigraph g = random_multigraph(rng, 5, 8);
    if (!g.is_connected()) continue;
    ++connected_seen;
    CHECK(g.bridges() == testsupport::bridges_bruteforce(g));
  }
}

TEST_CASE("split_at_bridge", "[multigraph]") {
  SECTION("tau=5 example splits into islands of 1 and 3 vertices") {
    auto [a, b] = tau5_example().split_at_bridge(EdgeKey(0, 1));
    CHECK(a.vertex_count() == 1);
    CHECK(a.edge_count() == 0);
    REQUIRE(b.vertex_count() == 3);
    CHECK(b.edge_count() == 5);
    CHECK(b.multiplicity(EdgeKey(0, 2)) == 2);
    CHECK(b.multiplicity(EdgeKey(1, 1)) == 1);
  }
  SECTION("a single edge splits into two points") {
    auto [a, b] = Multigraph(2).add_edge(0, 1).split_at_bridge(EdgeKey(0, 1));
    CHECK(a == Multigraph(1));
    CHECK(b == Multigraph(1));
  }
  SECTION("non-bridge input is rejected") {
    CHECK_THROWS_AS(testsupport::triangle().split_at_bridge(EdgeKey(0, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("first_betti", "[multigraph]") {
  CHECK(tau5_example().first_betti() == 3);
  CHECK(testsupport::path(5).first_betti() == 0);
  CHECK(Multigraph(1).add_edge(0, 0).first_betti() == 1);
  CHECK_THROWS_AS(Multigraph(2).first_betti(), NotConnectedError);
}

TEST_CASE("is_tree", "[multigraph]") {
  CHECK(testsupport::path(4).is_tree());
  CHECK_FALSE(tau5_example().is_tree());
  CHECK(Multigraph(1).is_tree());
  CHECK_FALSE(Multigraph(1).add_edge(0, 0).is_tree());
  CHECK_FALSE(Multigraph(2).is_tree());
}

TEST_CASE("structural identities on random multigraphs", "[multigraph][property]") {
  for (const Multigraph& g : testsupport::corpus(7002, 200)) {
    // handshake: degree sum is twice the edge count
    long long degree_sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    for (const auto& [key, mult] : g.edges()) {
      CHECK(g.delete_edge(key).edge_count() == g.edge_count() - 1);
      if (key.is_loop()) continue;
      Multigraph contracted = g.contract_edge(key);
      CHECK(contracted.edge_count() == g.edge_count() - 1);
      CHECK(contracted.vertex_count() == g.vertex_count() - 1);
    }

    if (g.is_connected()) CHECK((g.first_betti() == 0) == g.is_tree());

    // loop stripping and leaf pruning preserve the tree count
    BigInt reference = count_trees_bruteforce(g);
    CHECK(count_trees_bruteforce(g.strip_loops()) == reference);
    CHECK(count_trees_bruteforce(g.prune_leaves().first) == reference);
  }
}

TEST_CASE("contracting one copy of a parallel pair, then stripping, equals "
          "deleting both and merging",
          "[multigraph][property]") {
  std::mt19937 rng(7003);
  int checked = 0;
  for (int attempt = 0; attempt < 5000 && checked < 60; ++attempt) {
    Multigraph g = random_multigraph(rng, 5, 8);
    const EdgeKey* pair_key = nullptr;
    for (const auto& [key, mult] : g.edges())
      if (!key.is_loop() && mult == 2) pair_key = &key;
    if (!pair_key) continue;
    ++checked;

    Multigraph via_contract = g.contract_edge(*pair_key).strip_loops();
    Multigraph via_merge =
        testsupport::merge_vertices(
            g.delete_edge(*pair_key).delete_edge(*pair_key), pair_key->u,
            pair_key->v)
            .strip_loops();
    CHECK(via_contract == via_merge);
  }
  CHECK(checked == 60);
}
