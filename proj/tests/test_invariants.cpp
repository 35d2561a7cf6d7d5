#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgeideal/invariants.hpp"
#include "edgeideal/line_graph.hpp"
#include "edgeideal/trees.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph t1() { return build_graph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}); }

}  // namespace

TEST_CASE("independence number") {
  CHECK(max_independent_set_size(cycle_graph(7)) == 3);
  CHECK(max_independent_set_size(complete_graph(5)) == 1);
  CHECK(max_independent_set_size(empty_graph(4)) == 4);
  CHECK(max_independent_set_size(Graph()) == 0);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 10, 0.35);
    CHECK(max_independent_set_size(g) == oracle::independence_number(g));
  }
}

TEST_CASE("induced matching number") {
  CHECK(induced_matching_number(path_graph(4)) == 1);
  CHECK(induced_matching_number(path_graph(5)) == 2);
  CHECK(induced_matching_number(cycle_graph(6)) == 2);
  CHECK(induced_matching_number(complete_graph(5)) == 1);
  CHECK(induced_matching_number(empty_graph(3)) == 0);
  CHECK(induced_matching_number(line_graph(t1()).graph) == 2);

  const Graph p7 = path_graph(7);
  const auto witness = max_induced_matching(p7);
  CHECK(witness.size() == 2);
  CHECK(oracle::induced_matching(p7, witness));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(rng, 3 + trial % 6, 0.4);
    CHECK(induced_matching_number(g) == oracle::induced_matching_number(g));
  }
}

TEST_CASE("triangles and maximal cliques") {
  CHECK(count_triangles(complete_graph(5)) == 10);
  CHECK(count_triangles(cycle_graph(5)) == 0);
  const Graph lt1 = line_graph(t1()).graph;
  CHECK(maximal_cliques(lt1) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}});
  CHECK(maximal_cliques(Graph()) == std::vector<std::vector<Vertex>>{{}});
  CHECK(maximal_cliques(empty_graph(2)) == std::vector<std::vector<Vertex>>{{0}, {1}});
  CHECK(maximal_independent_sets(path_graph(3)) == std::vector<std::vector<Vertex>>{{0, 2}, {1}});
  CHECK(minimal_vertex_covers(path_graph(3)) == std::vector<std::vector<Vertex>>{{0, 2}, {1}});
}

TEST_CASE("minimal vertex covers are exactly the inclusion-minimal covers") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 7, 0.45);
    std::vector<std::vector<Vertex>> expected;
    const int n = g.order();
    auto covers = [&](std::uint32_t m) {
      for (const Edge& e : g.edges())
        if (!(m >> e.a & 1u) && !(m >> e.b & 1u)) return false;
      return true;
    };
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (!covers(m)) continue;
      bool minimal = true;
      for (Vertex v = 0; v < n && minimal; ++v)
        if (m >> v & 1u) minimal = !covers(m & ~(1u << v));
      if (minimal) expected.push_back(oracle::members(m, n));
    }
    std::sort(expected.begin(), expected.end());
    CHECK(minimal_vertex_covers(g) == expected);
  }
}

TEST_CASE("bouquets") {
  const Graph lt1 = line_graph(t1()).graph;
  CHECK(bouquet_d_prime(lt1) == 4);
  const BouquetSet best = best_bouquet_set(lt1);
  CHECK(best.flower_count() == 4);
  CHECK(is_semi_strongly_disjoint(lt1, best));

  CHECK(bouquet_d_prime(complete_graph(4)) == 3);
  CHECK(bouquet_d_prime(path_graph(4)) == 2);
  CHECK(bouquet_d_prime(empty_graph(3)) == 0);
  CHECK(bouquet_d_prime(path_graph(6)) == 4);

  const Graph p4 = path_graph(4);
  CHECK(is_semi_strongly_disjoint(p4, {{{0, {1}}, {3, {2}}}}));
  CHECK_FALSE(is_semi_strongly_disjoint(p4, {{{1, {0}}, {2, {3}}}}));  // adjacent roots
  CHECK_FALSE(is_semi_strongly_disjoint(p4, {{{0, {1}}, {2, {1}}}}));  // shared flower
  CHECK_FALSE(is_semi_strongly_disjoint(p4, {{{0, {2}}}}));           // flower not adjacent
  CHECK_FALSE(is_semi_strongly_disjoint(p4, {{{0, {}}}}));            // empty bouquet
}

TEST_CASE("bouquet search matches a brute-force bouquet enumeration") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 4, 0.5);
    const int n = g.order();
    // Assign every vertex a role: unused, root, or flower of some root.
    int best = 0;
    std::vector<int> role(static_cast<std::size_t>(n), -2);
    auto evaluate = [&] {
      BouquetSet set;
      for (Vertex r = 0; r < n; ++r) {
        if (role[static_cast<std::size_t>(r)] != -1) continue;
        Bouquet b{r, {}};
        for (Vertex f = 0; f < n; ++f)
          if (role[static_cast<std::size_t>(f)] == r) b.flowers.push_back(f);
        set.bouquets.push_back(b);
      }
      if (is_semi_strongly_disjoint(g, set)) best = std::max(best, static_cast<int>(set.flower_count()));
    };
    auto assign = [&](auto&& self, Vertex v) -> void {
      if (v == n) return evaluate();
      for (int r = -2; r < n; ++r) {
        if (r == v) continue;
        role[static_cast<std::size_t>(v)] = r;
        self(self, v + 1);
      }
    };
    assign(assign, 0);
    CHECK(bouquet_d_prime(g) == best);
    CHECK(is_semi_strongly_disjoint(g, best_bouquet_set(g)));
  }
}
