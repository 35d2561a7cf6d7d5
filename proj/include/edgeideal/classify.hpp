#ifndef EDGEIDEAL_CLASSIFY_HPP
#define EDGEIDEAL_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// The tree families whose line graphs have edge ideals with a linear resolution.
enum class TreeTag { Star, BroomDiameter3, PartiallyWhiskeredStar, PathAtMost5, NotLinear };

std::string to_string(TreeTag tag);

struct TreeClass {
  TreeTag tag = TreeTag::NotLinear;
  /// Star center, broom handle vertex, or whiskered-star center.
  std::optional<Vertex> center;
  /// For paths: the vertices in path order. For brooms: the handle path.
  std::vector<Vertex> path;

  bool linear() const { return tag != TreeTag::NotLinear; }
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Most specific matching family; NotLinear when none applies. Throws GraphError for non-trees.
TreeClass classify_tree(const Graph& tree);

/// Center of a star containing every vertex, if any.
std::optional<Vertex> star_center(const Graph& tree);
/// A star with at most one pendant edge added to each of its vertices; returns the star center.
std::optional<Vertex> partially_whiskered_star_center(const Graph& tree);
bool is_partially_whiskered_star(const Graph& tree);
/// Diameter exactly 3 with one side of the central edge carrying a single leaf.
bool is_broom_diameter3(const Graph& tree);
/// Vertices in path order when the tree is a path on 2..5 vertices.
std::optional<std::vector<Vertex>> short_path_order(const Graph& tree);

struct CaterpillarProfile {
  int n = 0;
  /// Non-leaf vertices in path order, starting from the smaller endpoint id.
  std::vector<Vertex> backbone;
  /// Backbone vertices of degree >= 2, v_1..v_r in path order.
  std::vector<Vertex> cutpoints;
  std::vector<int> cutpoint_degrees;

  int r() const { return static_cast<int>(cutpoints.size()); }
  bool cutpoints_degree_at_least(int d) const;
  bool all_degrees_at_most(int d) const;
  bool has_degree_two_cutpoint() const;
};

bool is_caterpillar(const Graph& tree);
/// Throws PreconditionError for non-caterpillars (and for trees on fewer than 3 vertices,
/// whose backbone is empty).
CaterpillarProfile caterpillar_profile(const Graph& tree);

/// Cutpoint count; requires every vertex to have degree 1 or at most 4.
int caterpillar_regularity(const Graph& tree);
/// n - 1 - floor((r + 1) / 2).
int caterpillar_pd(const Graph& tree);
/// floor((r + 1) / 2).
int caterpillar_depth(const Graph& tree);
/// Cutpoint count s; requires every cutpoint to have degree >= 3.
int caterpillar_dim(const Graph& tree);
/// |V(L(T))| - dim = (n - 1) - s, under the same hypothesis as caterpillar_dim.
int caterpillar_height(const Graph& tree);
/// n - s, the height exactly as printed alongside the dimension statement.
int caterpillar_height_printed(const Graph& tree);

}  // namespace edgeideal

#endif  // EDGEIDEAL_CLASSIFY_HPP
