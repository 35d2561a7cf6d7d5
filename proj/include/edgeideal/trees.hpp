#ifndef EDGEIDEAL_TREES_HPP
#define EDGEIDEAL_TREES_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// A tree up to isomorphism: the center-rooted AHU encoding plus a
/// representative relabeled in canonical preorder.
struct CanonicalTree {
  int n = 0;
  std::string form;
  std::vector<Edge> edges;

  Graph graph() const { return Graph(n, edges); }
  friend bool operator==(const CanonicalTree& x, const CanonicalTree& y) { return x.form == y.form; }
};

/// Lexicographically smallest AHU string over the (one or two) centers.
/// Throws GraphError for non-trees.
std::string canonical_form(const Graph& tree);
CanonicalTree canonicalize(const Graph& tree);

inline constexpr int kMaxEnumerationOrder = 14;
inline constexpr int kMaxPruferEnumerationOrder = 8;

/// One representative per isomorphism class, sorted by canonical form.
/// Prüfer enumeration up to n = 8, leaf extension of the (n-1)-trees above.
std::vector<CanonicalTree> enumerate_trees(int n);
std::vector<CanonicalTree> enumerate_trees_prufer(int n);
std::vector<CanonicalTree> enumerate_trees_by_extension(int n);

/// Standard Prüfer decode; ids in `code` are 0-based and the tree has code.size() + 2 vertices.
Graph prufer_decode(const std::vector<Vertex>& code);
std::vector<Vertex> prufer_encode(const Graph& tree);

enum class TreeFormat { EdgeList, Prufer };

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, SelfLoop, OutOfRange, NotATree };
  ParseError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Text formats use 1-based ids; the returned graph is 0-based.
Graph parse_tree(std::istream& in, TreeFormat format);
Graph parse_tree(const std::string& text, TreeFormat format);

std::string emit_edgelist(const Graph& tree);
std::string emit_prufer(const Graph& tree);

}  // namespace edgeideal

#endif  // EDGEIDEAL_TREES_HPP
