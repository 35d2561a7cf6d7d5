#ifndef EDGEIDEAL_HOMOLOGY_HPP
#define EDGEIDEAL_HOMOLOGY_HPP

#include <algorithm>
#include <vector>

#include <Eigen/Core>

#include "edgeideal/graph.hpp"
#include "edgeideal/scalar.hpp"

namespace edgeideal {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Rational coefficients, realized by fraction-free integer elimination.
using Rational = CheckedInt;
using GF2 = ModP<2>;

/// Rank by fraction-free (Bareiss) elimination. Every division is exact, so
/// the same routine serves integral domains and finite fields.
template <typename Scalar>
Eigen::Index exact_rank(DenseMatrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  Scalar previous(1);
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      if (pivot_row < 0 || m(r, c).magnitude() < m(pivot_row, c).magnitude()) pivot_row = r;
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const Scalar pivot = m(rank, c);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const Scalar factor = m(r, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) m(r, j) = (pivot * m(r, j) - factor * m(rank, j)) / previous;
      m(r, c) = Scalar(0);
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

/// Faces grouped by cardinality: faces[s] lists the (s-1)-dimensional faces as
/// sorted bitmasks. faces[0] holds the empty face whenever the complex is nonvoid.
using FaceLattice = std::vector<std::vector<VertexSet>>;

/// Matrix of the simplicial boundary from faces of size s to faces of size s-1,
/// with the sign (-1)^k for dropping the k-th smallest vertex.
template <typename Scalar>
DenseMatrix<Scalar> boundary_matrix(const FaceLattice& faces, std::size_t s) {
  const auto& targets = faces[s - 1];
  const auto& sources = faces[s];
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(targets.size()),
                                                    static_cast<Eigen::Index>(sources.size()));
  for (std::size_t col = 0; col < sources.size(); ++col) {
    int k = 0;
    for (VertexSet rest = sources[col]; rest; rest &= rest - 1, ++k) {
      const VertexSet facet = sources[col] & ~(rest & -rest);
      const auto it = std::lower_bound(targets.begin(), targets.end(), facet);
      m(static_cast<Eigen::Index>(it - targets.begin()), static_cast<Eigen::Index>(col)) =
          Scalar(k % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

/// dim H~_d for d = -1 .. max dimension; entry d+1 holds dimension d.
template <typename Scalar = Rational>
std::vector<int> reduced_homology_ranks(const FaceLattice& faces) {
  std::vector<Eigen::Index> rank(faces.size() + 1, 0);
  for (std::size_t s = 1; s < faces.size(); ++s) rank[s] = exact_rank(boundary_matrix<Scalar>(faces, s));
  std::vector<int> out(faces.size(), 0);
  for (std::size_t s = 0; s < faces.size(); ++s)
    out[s] = static_cast<int>(static_cast<Eigen::Index>(faces[s].size()) - rank[s] - rank[s + 1]);
  return out;
}

/// Finite abstract simplicial complex given by its facets.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<Vertex>> facets;

  /// Every face, grouped by size. A complex with no facets is void (no faces at all).
  FaceLattice faces() const;
  int dimension() const;
};

/// Facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

/// Faces of the independence complex of g restricted to `within`.
FaceLattice independence_faces(const Graph& g, VertexSet within);

template <typename Scalar = Rational>
std::vector<int> reduced_homology_ranks(const SimplicialComplex& k) {
  return reduced_homology_ranks<Scalar>(k.faces());
}

/// Sum over faces of (-1)^dim, the empty face included.
long long reduced_euler_characteristic(const FaceLattice& faces);

}  // namespace edgeideal

#endif  // EDGEIDEAL_HOMOLOGY_HPP
