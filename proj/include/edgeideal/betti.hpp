#ifndef EDGEIDEAL_BETTI_HPP
#define EDGEIDEAL_BETTI_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"

namespace edgeideal {

/// Graded Betti numbers beta_{i,j} of S/I over a polynomial ring in `nvars` variables.
/// Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t value);
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  /// Total Betti number beta_i = sum over j.
  std::uint64_t total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int nvars_ = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// The two second-syzygy counts of an edge ideal: b = beta_{2,3}, c = beta_{2,4}.
struct BettiSecond {
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  friend bool operator==(const BettiSecond&, const BettiSecond&) = default;
};

BettiSecond second_betti(const BettiTable& t);

/// The coefficient field of the homology computations.
enum class Coefficients { Rational, GF2 };

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kMaxBettiOrder = 13;

/// beta_{i,j}(S/I(G)) = sum over |W| = j of dim H~_{j-i-1} of the independence
/// complex of G restricted to W. Refuses graphs above kMaxBettiOrder vertices.
BettiTable graded_betti_table(const Graph& g, Coefficients field = Coefficients::Rational);

int projective_dimension(const BettiTable& t);
int regularity(const BettiTable& t);
/// nvars - pd, by Auslander-Buchsbaum.
int depth_value(const BettiTable& t);
/// Every nonzero beta_{i,j} with i >= 1 sits at j = i + 1. The zero ideal
/// qualifies vacuously.
bool has_linear_resolution(const BettiTable& t);

int projective_dimension(const Graph& g);
int regularity(const Graph& g);
int depth_value(const Graph& g);
bool has_linear_resolution(const Graph& g);

/// Number of edges of L(G), as sum over v of C(deg v, 2).
std::uint64_t line_edge_count_formula(const Graph& g);

/// First Zagreb index, sum of squared degrees.
std::uint64_t zagreb_m1(const Graph& g);

/// Closed form for beta_{2,3} of R/I(L(T)) in terms of the tree T.
std::uint64_t second_betti_b_formula(const Graph& tree);

/// Closed form for beta_{2,4} of R/I(L(T)): the distance-split double sum
/// over unordered vertex pairs of T.
std::uint64_t second_betti_c_formula(const Graph& tree);

/// Triple sum of neighbourhood differences claimed to count triangles in the
/// complement of L(T).
std::uint64_t complement_c3_formula(const Graph& tree);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace edgeideal

#endif  // EDGEIDEAL_BETTI_HPP
