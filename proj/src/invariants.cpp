#include "edgeideal/invariants.hpp"

#include <algorithm>
#include <functional>

namespace edgeideal {

namespace {

struct IndependentSearch {
  const Graph& g;
  int best = 0;

  void run(VertexSet candidates, int size) {
    if (size + popcount(candidates) <= best) return;
    if (!candidates) {
      best = size;
      return;
    }
    // Branch on the candidate with the most candidate neighbours.
    Vertex pivot = lowest(candidates);
    int pivot_degree = -1;
    for (VertexSet s = candidates; s; s &= s - 1) {
      const Vertex v = lowest(s);
      const int d = popcount(g.neighbor_mask(v) & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree == 0) {
      best = std::max(best, size + popcount(candidates));
      return;
    }
    run(candidates & ~(g.neighbor_mask(pivot) | bit(pivot)), size + 1);
    run(candidates & ~bit(pivot), size);
  }
};

struct InducedMatchingSearch {
  const Graph& g;
  std::vector<Edge> current;
  std::vector<Edge> best;

  // `free` holds the vertices not yet matched or adjacent to a matched edge.
  void run(VertexSet free) {
    if (current.size() + static_cast<std::size_t>(popcount(free)) / 2 <= best.size()) return;
    Vertex u = -1;
    for (VertexSet s = free; s; s &= s - 1) {
      if (g.neighbor_mask(lowest(s)) & free) {
        u = lowest(s);
        break;
      }
    }
    if (u == -1) {
      if (current.size() > best.size()) best = current;
      return;
    }
    const VertexSet closed_u = g.neighbor_mask(u) | bit(u);
    for (VertexSet s = g.neighbor_mask(u) & free; s; s &= s - 1) {
      const Vertex v = lowest(s);
      current.emplace_back(u, v);
      run(free & ~(closed_u | g.neighbor_mask(v)));
      current.pop_back();
    }
    run(free & ~bit(u));
  }
};

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<std::vector<Vertex>>& out) {
  if (!p && !x) {
    std::vector<Vertex> clique;
    for (VertexSet s = r; s; s &= s - 1) clique.push_back(lowest(s));
    out.push_back(std::move(clique));
    return;
  }
  Vertex pivot = lowest(p | x);
  int best = -1;
  for (VertexSet s = p | x; s; s &= s - 1) {
    const int d = popcount(g.neighbor_mask(lowest(s)) & p);
    if (d > best) {
      best = d;
      pivot = lowest(s);
    }
  }
  for (VertexSet s = p & ~g.neighbor_mask(pivot); s; s &= s - 1) {
    const Vertex v = lowest(s);
    bron_kerbosch(g, r | bit(v), p & g.neighbor_mask(v), x & g.neighbor_mask(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

// Kuhn's augmenting paths: roots on one side, their non-root neighbours on the other.
bool saturating_matching(const Graph& g, const std::vector<Vertex>& roots, std::vector<Vertex>& owner) {
  owner.assign(static_cast<std::size_t>(g.order()), -1);
  std::function<bool(Vertex, VertexSet&)> augment = [&](Vertex root, VertexSet& seen) {
    for (Vertex w : g.neighbors(root)) {
      if (seen & bit(w)) continue;
      seen |= bit(w);
      const Vertex holder = owner[static_cast<std::size_t>(w)];
      if (holder == -1 || augment(holder, seen)) {
        owner[static_cast<std::size_t>(w)] = root;
        return true;
      }
    }
    return false;
  };
  for (Vertex root : roots) {
    VertexSet seen = 0;
    if (!augment(root, seen)) return false;
  }
  return true;
}

struct BouquetSearch {
  const Graph& g;
  int best_flowers = 0;
  std::vector<Vertex> best_roots;
  std::vector<Vertex> roots;
  std::vector<Vertex> owner;

  // Roots form an independent set, so every neighbour of a root can be a flower;
  // the only constraint left is that each root keeps a private flower.
  void run(Vertex next, VertexSet root_set, VertexSet blocked) {
    VertexSet reach = 0;
    for (Vertex r : roots) reach |= g.neighbor_mask(r);
    const int flowers = popcount(reach & ~root_set);
    if (flowers > best_flowers) {
      best_flowers = flowers;
      best_roots = roots;
    }
    for (Vertex v = next; v < g.order(); ++v) {
      if (blocked & bit(v)) continue;
      if (g.neighbor_mask(v) == 0) continue;
      roots.push_back(v);
      if (saturating_matching(g, roots, owner)) run(v + 1, root_set | bit(v), blocked | g.neighbor_mask(v) | bit(v));
      roots.pop_back();
    }
  }
};

}  // namespace

int max_independent_set_size(const Graph& g) {
  require_masks(g, "max_independent_set_size");
  IndependentSearch search{g};
  search.run(full_set(g.order()), 0);
  return search.best;
}

std::vector<Edge> max_induced_matching(const Graph& g) {
  require_masks(g, "induced_matching_number");
  InducedMatchingSearch search{g, {}, {}};
  search.run(full_set(g.order()));
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

int induced_matching_number(const Graph& g) { return static_cast<int>(max_induced_matching(g).size()); }

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v))
        if (w > v && g.adjacent(u, w)) ++count;
    }
  return count;
}

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  require_masks(g, "maximal_cliques");
  std::vector<std::vector<Vertex>> out;
  bron_kerbosch(g, 0, full_set(g.order()), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g) {
  return maximal_cliques(complement(g));
}

std::vector<std::vector<Vertex>> minimal_vertex_covers(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& independent : maximal_independent_sets(g)) {
    std::vector<Vertex> cover;
    std::size_t k = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (k < independent.size() && independent[k] == v) {
        ++k;
        continue;
      }
      cover.push_back(v);
    }
    out.push_back(std::move(cover));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t BouquetSet::flower_count() const {
  std::size_t total = 0;
  for (const auto& b : bouquets) total += b.flowers.size();
  return total;
}

bool is_semi_strongly_disjoint(const Graph& g, const BouquetSet& set) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  auto claim = [&](Vertex v) {
    if (v < 0 || v >= g.order() || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = 1;
    return true;
  };
  for (const auto& b : set.bouquets) {
    if (b.flowers.empty() || !claim(b.root)) return false;
    for (Vertex f : b.flowers)
      if (!claim(f) || !g.adjacent(b.root, f)) return false;
  }
  for (std::size_t i = 0; i < set.bouquets.size(); ++i)
    for (std::size_t j = i + 1; j < set.bouquets.size(); ++j)
      if (g.adjacent(set.bouquets[i].root, set.bouquets[j].root)) return false;
  return true;
}

BouquetSet best_bouquet_set(const Graph& g) {
  require_masks(g, "bouquet_d_prime");
  BouquetSearch search{g, 0, {}, {}, {}};
  search.run(0, 0, 0);

  BouquetSet out;
  if (search.best_roots.empty()) return out;
  std::vector<Vertex> owner;
  saturating_matching(g, search.best_roots, owner);
  VertexSet root_set = 0;
  for (Vertex r : search.best_roots) root_set |= bit(r);
  for (Vertex r : search.best_roots) out.bouquets.push_back({r, {}});
  for (Vertex v = 0; v < g.order(); ++v) {
    if (root_set & bit(v)) continue;
    Vertex root = owner[static_cast<std::size_t>(v)];
    if (root == -1) {
      for (Vertex r : search.best_roots)
        if (g.adjacent(r, v)) {
          root = r;
          break;
        }
    }
    if (root == -1) continue;
    for (auto& b : out.bouquets)
      if (b.root == root) b.flowers.push_back(v);
  }
  return out;
}

int bouquet_d_prime(const Graph& g) { return static_cast<int>(best_bouquet_set(g).flower_count()); }

}  // namespace edgeideal
