#include "edgeideal/classify.hpp"

#include <algorithm>

namespace edgeideal {

std::string to_string(TreeTag tag) {
  switch (tag) {
    case TreeTag::Star: return "Star";
    case TreeTag::BroomDiameter3: return "BroomDiameter3";
    case TreeTag::PartiallyWhiskeredStar: return "PartiallyWhiskeredStar";
    case TreeTag::PathAtMost5: return "PathAtMost5";
    case TreeTag::NotLinear: return "NotLinear";
  }
  return "?";
}

namespace {

void require_tree(const Graph& g, const char* what) {
  if (!is_tree(g)) throw GraphError(std::string(what) + ": input is not a tree");
}

std::vector<Vertex> path_from(const Graph& g, Vertex start, Vertex previous) {
  std::vector<Vertex> out{start};
  for (Vertex cur = start;;) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != previous) next = w;
    if (next == -1) break;
    previous = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

}  // namespace

std::optional<Vertex> star_center(const Graph& tree) {
  if (tree.order() < 2) return std::nullopt;
  for (Vertex v = 0; v < tree.order(); ++v)
    if (degree(tree, v) == tree.order() - 1) return v;
  return std::nullopt;
}

std::optional<Vertex> partially_whiskered_star_center(const Graph& tree) {
  if (tree.order() < 2) return std::nullopt;
  for (Vertex c = 0; c < tree.order(); ++c) {
    const auto dist = distances_from(tree, c);
    const bool within_two = std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d <= Distance(2); });
    const auto nb = tree.neighbors(c);
    const bool whiskers = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return degree(tree, w) <= 2; });
    if (within_two && whiskers) return c;
  }
  return std::nullopt;
}

bool is_partially_whiskered_star(const Graph& tree) {
  require_tree(tree, "is_partially_whiskered_star");
  return partially_whiskered_star_center(tree).has_value();
}

bool is_broom_diameter3(const Graph& tree) {
  if (tree.order() < 4 || diameter(tree) != Distance(3)) return false;
  // A diameter-3 tree is a double star; its central edge joins the two non-leaves.
  for (const Edge& e : tree.edges()) {
    const int da = degree(tree, e.a), db = degree(tree, e.b);
    if (da >= 2 && db >= 2) return da == 2 || db == 2;
  }
  return false;
}

std::optional<std::vector<Vertex>> short_path_order(const Graph& tree) {
  const int n = tree.order();
  if (n < 2 || n > 5 || !is_tree(tree)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (degree(tree, v) > 2) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (degree(tree, v) == 1) return path_from(tree, v, -1);
  return std::nullopt;
}

TreeClass classify_tree(const Graph& tree) {
  require_tree(tree, "classify_tree");
  TreeClass out;
  if (auto c = star_center(tree)) {
    out.tag = TreeTag::Star;
    out.center = c;
    return out;
  }
  if (auto order = short_path_order(tree)) {
    out.tag = TreeTag::PathAtMost5;
    out.path = std::move(*order);
    return out;
  }
  if (is_broom_diameter3(tree)) {
    out.tag = TreeTag::BroomDiameter3;
    for (const Edge& e : tree.edges()) {
      if (degree(tree, e.a) < 2 || degree(tree, e.b) < 2) continue;
      const Vertex handle = degree(tree, e.a) == 2 ? e.a : e.b;
      const Vertex head = handle == e.a ? e.b : e.a;
      out.center = head;
      for (Vertex w : tree.neighbors(handle))
        if (w != head) out.path = {w, handle, head};
    }
    return out;
  }
  if (auto c = partially_whiskered_star_center(tree)) {
    out.tag = TreeTag::PartiallyWhiskeredStar;
    out.center = c;
    return out;
  }
  return out;
}

bool CaterpillarProfile::cutpoints_degree_at_least(int d) const {
  return std::all_of(cutpoint_degrees.begin(), cutpoint_degrees.end(), [d](int x) { return x >= d; });
}

bool CaterpillarProfile::all_degrees_at_most(int d) const {
  // Leaves have degree 1, so only the cutpoints matter.
  return std::all_of(cutpoint_degrees.begin(), cutpoint_degrees.end(), [d](int x) { return x <= d; });
}

bool CaterpillarProfile::has_degree_two_cutpoint() const {
  return std::find(cutpoint_degrees.begin(), cutpoint_degrees.end(), 2) != cutpoint_degrees.end();
}

bool is_caterpillar(const Graph& tree) {
  require_tree(tree, "is_caterpillar");
  if (tree.order() < 3) return false;
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (degree(tree, v) == 1) continue;
    int inner = 0;
    for (Vertex w : tree.neighbors(v)) inner += degree(tree, w) >= 2 ? 1 : 0;
    if (inner > 2) return false;
  }
  return true;
}

CaterpillarProfile caterpillar_profile(const Graph& tree) {
  if (!is_caterpillar(tree)) throw PreconditionError("caterpillar_profile: not a caterpillar on at least 3 vertices");
  CaterpillarProfile p;
  p.n = tree.order();
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < tree.order(); ++v)
    if (degree(tree, v) >= 2) inner.push_back(v);
  const auto spine = induced_subgraph(tree, inner);
  Vertex start = 0;
  for (Vertex k = 0; k < spine.graph.order(); ++k) {
    if (degree(spine.graph, k) <= 1) {
      start = k;
      break;
    }
  }
  for (Vertex k : path_from(spine.graph, start, -1)) p.backbone.push_back(spine.labels[static_cast<std::size_t>(k)]);

  // The cutpoints of a tree are exactly its non-leaf vertices.
  if (articulation_points(tree) != inner) throw std::logic_error("caterpillar_profile: cutpoints differ from backbone");
  p.cutpoints = p.backbone;
  for (Vertex v : p.cutpoints) p.cutpoint_degrees.push_back(degree(tree, v));
  return p;
}

int caterpillar_regularity(const Graph& tree) {
  const auto p = caterpillar_profile(tree);
  if (!p.all_degrees_at_most(4)) throw PreconditionError("caterpillar_regularity: a vertex has degree above 4");
  return p.r();
}

int caterpillar_pd(const Graph& tree) {
  const auto p = caterpillar_profile(tree);
  return p.n - 1 - (p.r() + 1) / 2;
}

int caterpillar_depth(const Graph& tree) { return (caterpillar_profile(tree).r() + 1) / 2; }

int caterpillar_dim(const Graph& tree) {
  const auto p = caterpillar_profile(tree);
  if (!p.cutpoints_degree_at_least(3)) throw PreconditionError("caterpillar_dim: a cutpoint has degree below 3");
  return p.r();
}

int caterpillar_height(const Graph& tree) { return tree.order() - 1 - caterpillar_dim(tree); }

int caterpillar_height_printed(const Graph& tree) { return tree.order() - caterpillar_dim(tree); }

}  // namespace edgeideal
