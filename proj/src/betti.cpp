#include "edgeideal/betti.hpp"

#include <algorithm>
#include <string>

namespace edgeideal {

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : entries_)
    if (key.first == i) sum += value;
  return sum;
}

BettiSecond second_betti(const BettiTable& t) { return {t.at(2, 3), t.at(2, 4)}; }

namespace {

template <typename Scalar>
BettiTable hochster(const Graph& g) {
  BettiTable table(g.order());
  const VertexSet all = full_set(g.order());
  // Submask walk over every W, the empty set included.
  for (VertexSet w = all;; w = (w - 1) & all) {
    bool cone = false;
    for (VertexSet s = w; s && !cone; s &= s - 1) cone = (g.neighbor_mask(lowest(s)) & w) == 0;
    // A vertex isolated in G[W] is a cone point of the restricted complex, which is then acyclic.
    if (!cone) {
      const auto ranks = reduced_homology_ranks<Scalar>(independence_faces(g, w));
      const int j = popcount(w);
      for (std::size_t s = 0; s < ranks.size(); ++s)
        if (ranks[s] > 0) table.add(j - static_cast<int>(s), j, static_cast<std::uint64_t>(ranks[s]));
    }
    if (w == 0) break;
  }
  return table;
}

void require_tree(const Graph& g, const char* what) {
  if (!is_tree(g)) throw GraphError(std::string(what) + ": input is not a tree");
}

}  // namespace

BettiTable graded_betti_table(const Graph& g, Coefficients field) {
  if (g.order() > kMaxBettiOrder) {
    throw SizeLimitError("graded_betti_table: " + std::to_string(g.order()) +
                         " vertices exceeds the Hochster oracle cap of " + std::to_string(kMaxBettiOrder));
  }
  return field == Coefficients::GF2 ? hochster<GF2>(g) : hochster<Rational>(g);
}

int projective_dimension(const BettiTable& t) {
  int pd = 0;
  for (const auto& [key, value] : t.entries()) pd = std::max(pd, key.first);
  return pd;
}

int regularity(const BettiTable& t) {
  int reg = 0;
  for (const auto& [key, value] : t.entries()) reg = std::max(reg, key.second - key.first);
  return reg;
}

int depth_value(const BettiTable& t) { return t.nvars() - projective_dimension(t); }

bool has_linear_resolution(const BettiTable& t) {
  return std::all_of(t.entries().begin(), t.entries().end(),
                     [](const auto& entry) { return entry.first.first == 0 || entry.first.second == entry.first.first + 1; });
}

int projective_dimension(const Graph& g) { return projective_dimension(graded_betti_table(g)); }
int regularity(const Graph& g) { return regularity(graded_betti_table(g)); }
int depth_value(const Graph& g) { return depth_value(graded_betti_table(g)); }
bool has_linear_resolution(const Graph& g) { return has_linear_resolution(graded_betti_table(g)); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::uint64_t line_edge_count_formula(const Graph& g) {
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) sum += binomial(static_cast<std::uint64_t>(degree(g, v)), 2);
  return sum;
}

std::uint64_t zagreb_m1(const Graph& g) {
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::uint64_t>(degree(g, v));
    sum += d * d;
  }
  return sum;
}

std::uint64_t second_betti_b_formula(const Graph& tree) {
  require_tree(tree, "second_betti_b_formula");
  std::uint64_t edges_of_second_line_graph = 0;
  for (const Edge& e : tree.edges())
    edges_of_second_line_graph += binomial(static_cast<std::uint64_t>(degree(tree, e.a) + degree(tree, e.b) - 2), 2);
  std::uint64_t triangles = 0;
  for (Vertex v = 0; v < tree.order(); ++v) triangles += binomial(static_cast<std::uint64_t>(degree(tree, v)), 3);
  return edges_of_second_line_graph - triangles;
}

std::uint64_t second_betti_c_formula(const Graph& tree) {
  require_tree(tree, "second_betti_c_formula");
  std::uint64_t sum = 0;
  for (Vertex u = 0; u < tree.order(); ++u) {
    const auto dist = distances_from(tree, u);
    const auto du = static_cast<std::uint64_t>(degree(tree, u));
    for (Vertex v = u + 1; v < tree.order(); ++v) {
      const auto dv = static_cast<std::uint64_t>(degree(tree, v));
      if (dist[static_cast<std::size_t>(v)] != Distance(2)) {
        const bool adjacent = tree.adjacent(u, v);
        const std::uint64_t nu = adjacent ? du - 1 : du;
        const std::uint64_t nv = adjacent ? dv - 1 : dv;
        sum += binomial(nu, 2) * binomial(nv, 2);
      } else {
        // C(a,2) C(b,2) >= (a-1)(b-1) whenever both factors are nonzero; otherwise both sides vanish.
        const std::uint64_t pairs = binomial(du, 2) * binomial(dv, 2);
        const std::uint64_t overlap = (du - 1) * (dv - 1);
        sum += pairs >= overlap ? pairs - overlap : 0;
      }
    }
  }
  return sum;
}

std::uint64_t complement_c3_formula(const Graph& tree) {
  require_tree(tree, "complement_c3_formula");
  require_masks(tree, "complement_c3_formula");
  std::uint64_t sum = 0;
  const int n = tree.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w) {
        const VertexSet nu = tree.neighbor_mask(u), nv = tree.neighbor_mask(v), nw = tree.neighbor_mask(w);
        sum += static_cast<std::uint64_t>(popcount(nu & ~(nv | nw))) *
               static_cast<std::uint64_t>(popcount(nv & ~(nu | nw))) *
               static_cast<std::uint64_t>(popcount(nw & ~(nu | nv)));
      }
  return sum;
}

}  // namespace edgeideal
