#ifndef EDGEIDEAL_STUDY_HPP
#define EDGEIDEAL_STUDY_HPP

#include <optional>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/classify.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/line_graph.hpp"

namespace edgeideal {

/// One tree with everything the checks ask about it. Expensive quantities are
/// computed on first use and cached, so an instance must not be shared between
/// threads.
class TreeStudy {
 public:
  explicit TreeStudy(Graph tree);

  const Graph& tree() const { return tree_; }
  int n() const { return tree_.order(); }
  const std::string& form() const { return form_; }
  const LineGraph& line() const { return line_; }
  const Graph& line_complement() const { return line_complement_; }
  const TreeClass& tree_class() const { return class_; }

  /// The Hochster oracle is affordable for L(T).
  bool oracle_available() const { return line_.graph.order() <= kMaxBettiOrder; }
  const BettiTable& line_betti() const;
  const BettiTable& line_betti_gf2() const;

  int line_indmat() const;
  int line_independence_number() const;
  int line_bight() const;
  int line_min_cover() const;
  int line_d_prime() const;
  std::uint64_t line_gaps() const;
  std::uint64_t complement_cycles(int k) const;
  bool line_co_chordal() const;

 private:
  Graph tree_;
  std::string form_;
  LineGraph line_;
  Graph line_complement_;
  TreeClass class_;

  mutable std::optional<BettiTable> betti_, betti_gf2_;
  mutable std::optional<int> indmat_, alpha_, bight_, min_cover_, d_prime_;
  mutable std::optional<std::uint64_t> gaps_;
  mutable std::optional<bool> co_chordal_;
  mutable std::vector<std::optional<std::uint64_t>> cycles_;
};

/// Number of sets of three pairwise disjoint edges.
std::uint64_t count_three_matchings(const Graph& g);

}  // namespace edgeideal

#endif  // EDGEIDEAL_STUDY_HPP
