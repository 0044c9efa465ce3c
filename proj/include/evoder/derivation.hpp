#pragma once

#include <cstddef>
#include <vector>

#include "evoder/graph.hpp"
#include "evoder/rational_matrix.hpp"

namespace evoder {

/// Structure constants of an evolution algebra in a natural basis:
/// e_i * e_i = sum_k c(i, k) e_k and e_i * e_j = 0 for i != j.
struct StructureMatrix {
  RationalMatrix c;

  /// Throws DimensionMismatch unless `c` is square and non-empty.
  explicit StructureMatrix(RationalMatrix constants);

  std::size_t size() const { return c.rows(); }
};

/// Coordinates over the natural basis e_1..e_n.
struct AlgebraElement {
  std::vector<Rational> coords;

  static AlgebraElement basis_vector(std::size_t n, std::size_t i);
  std::size_t size() const { return coords.size(); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Spanning family of Der(A). Matrix D encodes d(e_i) = sum_k D(i, k) e_k,
/// so row i holds the image of e_i.
struct DerivationBasis {
  std::size_t n = 0;
  std::vector<RationalMatrix> mats;

  bool empty() const { return mats.empty(); }
  std::size_t size() const { return mats.size(); }
};

/// Adjacency matrix as structure constants. Throws ConnectivityError for
/// disconnected graphs.
StructureMatrix algebra_from_graph(const Graph& g);

/// (sum u_i e_i)(sum v_i e_i) = sum_i u_i v_i (e_i * e_i).
AlgebraElement evolution_product(const StructureMatrix& c, const AlgebraElement& u,
                                 const AlgebraElement& v);

/// Image of x under the linear map encoded by `d` (row i = image of e_i).
AlgebraElement apply_map(const RationalMatrix& d, const AlgebraElement& x);

/// Homogeneous linear system whose kernel is Der(A). Unknowns are d_ij in
/// row-major order (column i*n + j). Rows, in order:
///   for each i != j and each k:  c_jk d_ij + c_ik d_ji = 0
///   for each i, j:               sum_k c_ik d_kj - 2 c_ij d_ii = 0
/// Rows that vanish identically are kept.
RationalMatrix build_derivation_system(const StructureMatrix& c);

/// Kernel of build_derivation_system, reshaped to n x n matrices, in the
/// RREF free-variable normalization. Valid for any structure matrix.
DerivationBasis oracle_derivations(const StructureMatrix& c);

std::size_t derivation_dimension(const StructureMatrix& c);

}  // namespace evoder
