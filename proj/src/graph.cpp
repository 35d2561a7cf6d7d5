#include "edgeideal/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace edgeideal {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  const auto un = static_cast<std::size_t>(n);
  adj_.resize(un);
  matrix_.assign(un * un, 0);
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b >= n) {
      throw GraphError("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                       "} has an id outside 0.." + std::to_string(n - 1));
    }
    if (e.a == e.b) throw GraphError("self-loop at vertex " + std::to_string(e.a));
    auto& cell = matrix_[static_cast<std::size_t>(e.a) * un + static_cast<std::size_t>(e.b)];
    if (cell) continue;
    cell = 1;
    matrix_[static_cast<std::size_t>(e.b) * un + static_cast<std::size_t>(e.a)] = 1;
    adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
    ++edge_count_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  if (n <= kMaxMaskOrder) {
    masks_.assign(un, 0);
    for (std::size_t v = 0; v < un; ++v)
      for (Vertex w : adj_[v]) masks_[v] |= bit(w);
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string to_string(const Distance& d) {
  return d.finite() ? std::to_string(d.value()) : std::string("inf");
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

int degree(const Graph& g, Vertex v) { return static_cast<int>(g.neighbors(v).size()); }

std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()), Distance::infinite());
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(source)] = Distance(0);
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    const int du = dist[static_cast<std::size_t>(u)].value();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[static_cast<std::size_t>(w)].finite()) {
        dist[static_cast<std::size_t>(w)] = Distance(du + 1);
        frontier.push(w);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

Distance diameter(const Graph& g) {
  if (g.empty()) throw GraphError("diameter of the empty graph");
  Distance best(0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (const Distance& d : distances_from(g, u)) best = std::max(best, d);
  return best;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> labels(vertices.begin(), vertices.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (Vertex v : labels)
    if (v < 0 || v >= g.order()) throw GraphError("induced_subgraph: vertex out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (g.adjacent(labels[i], labels[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return {Graph(static_cast<int>(labels.size()), edges), std::move(labels)};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet vertices) {
  std::vector<Vertex> list;
  for (VertexSet s = vertices; s; s &= s - 1) list.push_back(lowest(s));
  return induced_subgraph(g, list);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d.finite(); });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

Graph remove_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep).graph;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph empty_graph(int n) { return Graph(n, {}); }

namespace {

// One DFS pass producing articulation points, bridges and blocks.
struct Lowpoint {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> edge_stack;
  std::vector<char> is_cut;
  std::vector<Edge> bridge_list;
  std::vector<std::vector<Vertex>> block_list;
  int timer = 0;

  explicit Lowpoint(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0),
        is_cut(static_cast<std::size_t>(graph.order()), 0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (disc[static_cast<std::size_t>(v)] != -1) continue;
      if (g.neighbors(v).empty()) {
        disc[static_cast<std::size_t>(v)] = timer++;
        block_list.push_back({v});
        continue;
      }
      visit(v, -1);
    }
  }

  void pop_block(const Edge& until) {
    std::vector<Vertex> block;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.a);
      block.push_back(e.b);
      if (e == until) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    block_list.push_back(std::move(block));
  }

  // Recursion depth is bounded by the vertex count, which is small here.
  void visit(Vertex u, Vertex parent) {
    const auto iu = static_cast<std::size_t>(u);
    disc[iu] = low[iu] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      const auto iw = static_cast<std::size_t>(w);
      if (disc[iw] == -1) {
        ++children;
        edge_stack.emplace_back(u, w);
        visit(w, u);
        low[iu] = std::min(low[iu], low[iw]);
        if (low[iw] > disc[iu]) bridge_list.emplace_back(u, w);
        if (low[iw] >= disc[iu]) {
          if (parent != -1) is_cut[iu] = 1;
          pop_block(Edge(u, w));
        }
      } else if (w != parent && disc[iw] < disc[iu]) {
        edge_stack.emplace_back(u, w);
        low[iu] = std::min(low[iu], disc[iw]);
      }
    }
    if (parent == -1 && children > 1) is_cut[iu] = 1;
  }
};

}  // namespace

std::vector<Vertex> articulation_points(const Graph& g) {
  Lowpoint lp(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (lp.is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  auto out = Lowpoint(g).bridge_list;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> blocks(const Graph& g) {
  auto out = Lowpoint(g).block_list;
  std::sort(out.begin(), out.end());
  return out;
}

void require_masks(const Graph& g, const char* what) {
  if (!g.has_masks()) {
    throw std::length_error(std::string(what) + ": graph has more than " +
                            std::to_string(kMaxMaskOrder) + " vertices");
  }
}

}  // namespace edgeideal
