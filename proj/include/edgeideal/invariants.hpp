#ifndef EDGEIDEAL_INVARIANTS_HPP
#define EDGEIDEAL_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "edgeideal/graph.hpp"

// Exact solvers for invariants that are NP-hard in general. All of them work
// on vertex bitmasks, so graphs are limited to kMaxMaskOrder vertices; the
// running time is exponential and meant for graphs of a few dozen vertices.

namespace edgeideal {

int max_independent_set_size(const Graph& g);
int induced_matching_number(const Graph& g);
/// A largest induced matching (lexicographically smallest among the ones found first).
std::vector<Edge> max_induced_matching(const Graph& g);

std::uint64_t count_triangles(const Graph& g);

/// Maximal cliques, each sorted, listed in lexicographic order.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);
std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g);
/// Inclusion-minimal vertex covers (complements of maximal independent sets).
std::vector<std::vector<Vertex>> minimal_vertex_covers(const Graph& g);

/// A star subgraph: root plus a nonempty set of flowers adjacent to it.
struct Bouquet {
  Vertex root = 0;
  std::vector<Vertex> flowers;
};

struct BouquetSet {
  std::vector<Bouquet> bouquets;

  std::size_t flower_count() const;
};

/// Vertex sets pairwise disjoint, roots pairwise non-adjacent, every flower
/// adjacent to its root, no bouquet without flowers.
bool is_semi_strongly_disjoint(const Graph& g, const BouquetSet& set);

/// A semi-strongly disjoint bouquet set with the maximum number of flowers.
BouquetSet best_bouquet_set(const Graph& g);

/// Maximum flower count over semi-strongly disjoint bouquet sets.
int bouquet_d_prime(const Graph& g);

}  // namespace edgeideal

#endif  // EDGEIDEAL_INVARIANTS_HPP
