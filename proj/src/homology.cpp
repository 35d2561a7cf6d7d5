#include "edgeideal/homology.hpp"

#include <set>

#include "edgeideal/invariants.hpp"

namespace edgeideal {

FaceLattice SimplicialComplex::faces() const {
  if (facets.empty()) return {};
  std::set<VertexSet> all;
  for (const auto& facet : facets) {
    VertexSet mask = 0;
    for (Vertex v : facet) mask |= bit(v);
    // Every subset of the facet, by the standard submask walk.
    for (VertexSet sub = mask;; sub = (sub - 1) & mask) {
      all.insert(sub);
      if (sub == 0) break;
    }
  }
  FaceLattice out;
  for (VertexSet face : all) {
    const auto size = static_cast<std::size_t>(popcount(face));
    if (out.size() <= size) out.resize(size + 1);
    out[size].push_back(face);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  int best = -1;
  for (const auto& facet : facets) best = std::max(best, static_cast<int>(facet.size()) - 1);
  return best;
}

SimplicialComplex independence_complex(const Graph& g) {
  return {g.order(), maximal_independent_sets(g)};
}

namespace {

void collect_independent(const Graph& g, VertexSet face, VertexSet candidates, FaceLattice& out) {
  const auto size = static_cast<std::size_t>(popcount(face));
  if (out.size() <= size) out.resize(size + 1);
  out[size].push_back(face);
  for (VertexSet s = candidates; s; s &= s - 1) {
    const Vertex v = lowest(s);
    // Only vertices above v remain candidates, so each face is produced once.
    const VertexSet above = candidates & ~((bit(v) << 1) - 1);
    collect_independent(g, face | bit(v), above & ~g.neighbor_mask(v), out);
  }
}

}  // namespace

FaceLattice independence_faces(const Graph& g, VertexSet within) {
  require_masks(g, "independence_faces");
  FaceLattice out;
  collect_independent(g, 0, within, out);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

long long reduced_euler_characteristic(const FaceLattice& faces) {
  long long chi = 0;
  for (std::size_t s = 0; s < faces.size(); ++s) {
    const auto count = static_cast<long long>(faces[s].size());
    chi += (s % 2 == 1) ? count : -count;
  }
  return chi;
}

}  // namespace edgeideal
