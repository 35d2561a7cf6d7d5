#ifndef EDGEIDEAL_STRUCTURE_HPP
#define EDGEIDEAL_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Two disjoint edges with no edge joining them (an induced 2K2), e < f.
struct GapPair {
  Edge e;
  Edge f;
  friend auto operator<=>(const GapPair&, const GapPair&) = default;
};

/// Maximum-cardinality search order, in visiting order.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);

/// Checks that the reverse of `order` is a perfect elimination ordering.
bool verify_reverse_peo(const Graph& g, const std::vector<Vertex>& order);

bool is_chordal(const Graph& g);
bool is_co_chordal(const Graph& g);

std::vector<GapPair> find_gaps(const Graph& g);
std::uint64_t count_gaps(const Graph& g);
bool is_gap_free(const Graph& g);

/// Number of k-vertex subsets inducing the cycle C_k. Requires k >= 3.
std::uint64_t count_induced_cycles(const Graph& g, int k);

/// No induced C_k with k >= 5 in g or in its complement.
bool is_weakly_chordal(const Graph& g);

}  // namespace edgeideal

#endif  // EDGEIDEAL_STRUCTURE_HPP
