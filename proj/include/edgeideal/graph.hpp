#ifndef EDGEIDEAL_GRAPH_HPP
#define EDGEIDEAL_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeideal {

using Vertex = int;

/// Bitmask over vertex ids 0..63; used by the exponential searches.
using VertexSet = std::uint64_t;
inline constexpr int kMaxMaskOrder = 64;

/// Unordered vertex pair, normalized so that a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  constexpr bool contains(Vertex v) const { return a == v || b == v; }
  constexpr bool disjoint(const Edge& o) const {
    return !contains(o.a) && !contains(o.b);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on out-of-range ids or self-loops; duplicate pairs are collapsed.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return n_ == 0; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(v)] != 0;
  }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Neighborhood as a bitmask. Requires order() <= kMaxMaskOrder.
  VertexSet neighbor_mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }
  bool has_masks() const { return n_ <= kMaxMaskOrder; }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.adj_ == y.adj_;
  }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
  std::vector<VertexSet> masks_;
};

/// Shortest-path length, or infinity between different components.
class Distance {
 public:
  constexpr explicit Distance(int value) : value_(value) {}
  static constexpr Distance infinite() { return Distance(); }

  constexpr bool finite() const { return value_ != kInfinite; }
  int value() const {
    if (!finite()) throw std::logic_error("value() of an infinite distance");
    return value_;
  }

  friend constexpr auto operator<=>(const Distance&, const Distance&) = default;

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  constexpr Distance() : value_(kInfinite) {}
  int value_;
};

std::string to_string(const Distance& d);

/// Subgraph induced on a vertex subset, relabeled 0..|W|-1.
/// labels[k] is the original id of new vertex k (increasing).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> labels;
};

Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int degree(const Graph& g, Vertex v);
Distance distance(const Graph& g, Vertex u, Vertex v);
/// Distances from source to every vertex.
std::vector<Distance> distances_from(const Graph& g, Vertex source);
/// Max pairwise distance; infinite for disconnected graphs. Throws for the empty graph.
Distance diameter(const Graph& g);

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet vertices);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Graph with one vertex removed, remaining vertices relabeled in increasing order.
Graph remove_vertex(const Graph& g, Vertex v);

// Classical constructions used throughout the tests and the harness.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph empty_graph(int n);

// Connectivity structure (Hopcroft-Tarjan).
std::vector<Vertex> articulation_points(const Graph& g);
std::vector<Edge> bridges(const Graph& g);
/// Vertex sets of the biconnected components; an isolated vertex is its own block.
std::vector<std::vector<Vertex>> blocks(const Graph& g);

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline Vertex lowest(VertexSet s) { return __builtin_ctzll(s); }
inline VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (bit(n) - 1); }

void require_masks(const Graph& g, const char* what);

}  // namespace edgeideal

#endif  // EDGEIDEAL_GRAPH_HPP
