#include "edgeideal/study.hpp"

#include "edgeideal/invariants.hpp"
#include "edgeideal/structure.hpp"
#include "edgeideal/trees.hpp"

namespace edgeideal {

TreeStudy::TreeStudy(Graph tree)
    : tree_(std::move(tree)),
      form_(canonical_form(tree_)),
      line_(line_graph(tree_)),
      line_complement_(complement(line_.graph)),
      class_(classify_tree(tree_)) {}

namespace {

template <typename T, typename F>
const T& cached(std::optional<T>& slot, F&& compute) {
  if (!slot) slot = compute();
  return *slot;
}

}  // namespace

const BettiTable& TreeStudy::line_betti() const {
  return cached(betti_, [&] { return graded_betti_table(line_.graph); });
}

const BettiTable& TreeStudy::line_betti_gf2() const {
  return cached(betti_gf2_, [&] { return graded_betti_table(line_.graph, Coefficients::GF2); });
}

int TreeStudy::line_indmat() const {
  return cached(indmat_, [&] { return induced_matching_number(line_.graph); });
}

int TreeStudy::line_independence_number() const {
  return cached(alpha_, [&] { return max_independent_set_size(line_.graph); });
}

int TreeStudy::line_bight() const {
  return cached(bight_, [&] {
    std::size_t best = 0;
    for (const auto& cover : minimal_vertex_covers(line_.graph)) best = std::max(best, cover.size());
    return static_cast<int>(best);
  });
}

int TreeStudy::line_min_cover() const {
  return cached(min_cover_, [&] {
    std::size_t best = static_cast<std::size_t>(line_.graph.order());
    for (const auto& cover : minimal_vertex_covers(line_.graph)) best = std::min(best, cover.size());
    return static_cast<int>(best);
  });
}

int TreeStudy::line_d_prime() const {
  return cached(d_prime_, [&] { return bouquet_d_prime(line_.graph); });
}

std::uint64_t TreeStudy::line_gaps() const {
  return cached(gaps_, [&] { return count_gaps(line_.graph); });
}

std::uint64_t TreeStudy::complement_cycles(int k) const {
  if (cycles_.size() <= static_cast<std::size_t>(k)) cycles_.resize(static_cast<std::size_t>(k) + 1);
  return cached(cycles_[static_cast<std::size_t>(k)], [&] { return count_induced_cycles(line_complement_, k); });
}

bool TreeStudy::line_co_chordal() const {
  return cached(co_chordal_, [&] { return is_co_chordal(line_.graph); });
}

std::uint64_t count_three_matchings(const Graph& g) {
  const auto edges = g.edges();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges[i].disjoint(edges[j])) continue;
      for (std::size_t k = j + 1; k < edges.size(); ++k)
        if (edges[k].disjoint(edges[i]) && edges[k].disjoint(edges[j])) ++count;
    }
  return count;
}

}  // namespace edgeideal
