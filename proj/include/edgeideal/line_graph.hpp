#ifndef EDGEIDEAL_LINE_GRAPH_HPP
#define EDGEIDEAL_LINE_GRAPH_HPP

#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// L(G) together with the source edge of G behind every vertex.
/// Vertex k of `graph` is the edge `labels[k]`; labels are in lexicographic order.
struct LineGraph {
  Graph graph;
  std::vector<Edge> labels;

  /// Line-graph vertex carrying the given source edge; -1 if absent.
  Vertex vertex_of(const Edge& e) const;
};

LineGraph line_graph(const Graph& g);

/// deg u + deg v - 2. Throws GraphError when e is not an edge of g.
int edge_degree(const Graph& g, const Edge& e);

/// Cutpoints of L(G), as line-graph vertex ids. G must be connected.
std::vector<Vertex> line_cutpoints(const Graph& g);

/// Bridges of L(G), as pairs of line-graph vertex ids. G must be connected.
std::vector<Edge> line_bridges(const Graph& g);

/// Every block is a clique and every cutpoint lies on exactly two blocks
/// (the block-graph shape of a tree's line graph). Also requires connectivity.
bool validate_block_structure(const LineGraph& lg);

}  // namespace edgeideal

#endif  // EDGEIDEAL_LINE_GRAPH_HPP
