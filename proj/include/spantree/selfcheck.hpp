#pragma once

#include <random>
#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"
#include "spantree/treecount.hpp"

namespace spantree {

// Seeded random multigraph: up to max_vertices vertices and up to
// max_total_multiplicity edge copies, loops and parallel edges included.
// Only the raw engine output is used, so the sequence of graphs depends on
// the seed alone.
inline Multigraph random_multigraph(std::mt19937& rng, int max_vertices,
                                    int max_total_multiplicity) {
  int n = 1 + static_cast<int>(rng() % max_vertices);
  Multigraph g(n);
  int copies = static_cast<int>(rng() % (max_total_multiplicity + 1));
  for (int i = 0; i < copies; ++i) {
    VertexId u = static_cast<VertexId>(rng() % n);
    VertexId v = static_cast<VertexId>(rng() % n);
    g = g.add_edge(u, v);
  }
  return g;
}

struct SelfcheckCase {
  Multigraph graph;
  BigInt by_enumeration;
  BigInt by_deletion_contraction;
  BigInt by_matrix_tree;

  bool agree() const {
    return by_enumeration == by_deletion_contraction &&
           by_deletion_contraction == by_matrix_tree;
  }
};

struct SelfcheckReport {
  unsigned seed = 0;
  std::vector<SelfcheckCase> cases;

  int failures() const {
    int n = 0;
    for (const auto& c : cases)
      if (!c.agree()) ++n;
    return n;
  }

  bool ok() const { return failures() == 0; }
};

// Cross-algorithm agreement suite: the three counting routes must agree
// exactly on every generated graph.
inline SelfcheckReport run_selfcheck(unsigned seed, int case_count) {
  if (case_count < 1) throw std::invalid_argument("need at least one case");
  SelfcheckReport report;
  report.seed = seed;
  std::mt19937 rng(seed);
  for (int i = 0; i < case_count; ++i) {
    Multigraph g = random_multigraph(rng, 4, 8);
    report.cases.push_back({g, tau(g, Algorithm::Enumeration),
                            tau(g, Algorithm::DeletionContraction),
                            tau(g, Algorithm::MatrixTree)});
  }
  return report;
}

} // namespace spantree
