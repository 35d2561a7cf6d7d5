#include "edgeideal/structure.hpp"

#include <algorithm>

namespace edgeideal {

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto iv = static_cast<std::size_t>(v);
      if (!visited[iv] && (pick == -1 || weight[iv] > weight[static_cast<std::size_t>(pick)])) pick = v;
    }
    visited[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) ++weight[static_cast<std::size_t>(w)];
  }
  return order;
}

bool verify_reverse_peo(const Graph& g, const std::vector<Vertex>& order) {
  // Eliminating in reverse visiting order, the neighbours of v that remain are
  // exactly those visited before v; they must be pairwise adjacent.
  std::vector<std::size_t> position(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = i;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(order[i]))
      if (position[static_cast<std::size_t>(w)] < i) earlier.push_back(w);
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        if (!g.adjacent(earlier[a], earlier[b])) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) { return verify_reverse_peo(g, maximum_cardinality_search(g)); }

bool is_co_chordal(const Graph& g) { return is_chordal(complement(g)); }

namespace {

bool joined(const Graph& g, const Edge& e, const Edge& f) {
  return g.adjacent(e.a, f.a) || g.adjacent(e.a, f.b) || g.adjacent(e.b, f.a) || g.adjacent(e.b, f.b);
}

template <typename Visit>
void for_each_gap(const Graph& g, Visit&& visit) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i].disjoint(edges[j]) && !joined(g, edges[i], edges[j])) visit(edges[i], edges[j]);
}

struct CycleCounter {
  const Graph& g;
  int k;
  Vertex start = 0;
  std::uint64_t count = 0;

  // `path` is an induced path from `start` to `last` with `length` vertices.
  void extend(Vertex last, VertexSet path, int length) {
    const bool closing = length + 1 == k;
    const VertexSet allowed = bit(last) | (closing ? bit(start) : 0);
    for (Vertex w : g.neighbors(last)) {
      if (w <= start || (path & bit(w))) continue;
      if ((g.neighbor_mask(w) & path) != allowed) continue;
      if (closing) {
        ++count;
        continue;
      }
      extend(w, path | bit(w), length + 1);
    }
  }
};

}  // namespace

std::vector<GapPair> find_gaps(const Graph& g) {
  std::vector<GapPair> out;
  for_each_gap(g, [&](const Edge& e, const Edge& f) { out.push_back({e, f}); });
  return out;
}

std::uint64_t count_gaps(const Graph& g) {
  std::uint64_t count = 0;
  for_each_gap(g, [&](const Edge&, const Edge&) { ++count; });
  return count;
}

bool is_gap_free(const Graph& g) { return count_gaps(g) == 0; }

std::uint64_t count_induced_cycles(const Graph& g, int k) {
  if (k < 3) throw GraphError("count_induced_cycles: k must be at least 3");
  require_masks(g, "count_induced_cycles");
  if (k > g.order()) return 0;
  // Each induced cycle is traced from its smallest vertex, once per direction.
  CycleCounter counter{g, k};
  for (Vertex s = 0; s < g.order(); ++s) {
    counter.start = s;
    counter.extend(s, bit(s), 1);
  }
  return counter.count / 2;
}

bool is_weakly_chordal(const Graph& g) {
  const Graph co = complement(g);
  for (int k = 5; k <= g.order(); ++k)
    if (count_induced_cycles(g, k) != 0 || count_induced_cycles(co, k) != 0) return false;
  return true;
}

}  // namespace edgeideal
