#include "edgeideal/line_graph.hpp"

#include <algorithm>

namespace edgeideal {

Vertex LineGraph::vertex_of(const Edge& e) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), e);
  if (it == labels.end() || *it != e) return -1;
  return static_cast<Vertex>(it - labels.begin());
}

LineGraph line_graph(const Graph& g) {
  std::vector<Edge> labels = g.edges();
  std::vector<Edge> edges;
  // Edges of L(G) come from pairs of edges meeting at a common vertex.
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> incident;
    for (Vertex w : g.neighbors(v)) {
      const auto it = std::lower_bound(labels.begin(), labels.end(), Edge(v, w));
      incident.push_back(static_cast<Vertex>(it - labels.begin()));
    }
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j) edges.emplace_back(incident[i], incident[j]);
  }
  Graph lg(static_cast<int>(labels.size()), edges);
  return {std::move(lg), std::move(labels)};
}

int edge_degree(const Graph& g, const Edge& e) {
  if (e.a < 0 || e.b >= g.order() || e.a == e.b || !g.adjacent(e.a, e.b)) {
    throw GraphError("edge_degree: {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                     "} is not an edge");
  }
  return degree(g, e.a) + degree(g, e.b) - 2;
}

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw GraphError(std::string(what) + ": input graph is disconnected");
}

}  // namespace

std::vector<Vertex> line_cutpoints(const Graph& g) {
  require_connected(g, "line_cutpoints");
  return articulation_points(line_graph(g).graph);
}

std::vector<Edge> line_bridges(const Graph& g) {
  require_connected(g, "line_bridges");
  return bridges(line_graph(g).graph);
}

bool validate_block_structure(const LineGraph& lg) {
  const Graph& g = lg.graph;
  if (!is_connected(g)) return false;
  const auto bs = blocks(g);
  std::vector<int> membership(static_cast<std::size_t>(g.order()), 0);
  for (const auto& block : bs) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      ++membership[static_cast<std::size_t>(block[i])];
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.adjacent(block[i], block[j])) return false;
    }
  }
  for (Vertex c : articulation_points(g))
    if (membership[static_cast<std::size_t>(c)] != 2) return false;
  return true;
}

}  // namespace edgeideal
