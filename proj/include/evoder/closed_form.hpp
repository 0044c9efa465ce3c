#pragma once

#include <cstddef>
#include <vector>

#include "evoder/derivation.hpp"
#include "evoder/graph.hpp"
#include "evoder/rational_matrix.hpp"

namespace evoder {

/// One diagonal block of the relabeled derivation matrix.
struct BlockSpec {
  std::size_t class_index = 0;
  int offset = 0;
  int size = 0;
};

struct ClosedFormBasis {
  std::size_t n = 0;
  VertexPermutation perm;        // relabeling used internally
  std::vector<BlockSpec> blocks;
  std::vector<RationalMatrix> mats;  // in the original labeling

  DerivationBasis as_derivation_basis() const { return {n, mats}; }
};

/// Skew-symmetric a x a matrices with zero column sums: the triangle
/// generators T(1, j, k), 2 <= j < k <= a (1-based), with
/// T(1,j) = T(j,k) = T(k,1) = 1 and the transposed entries -1.
/// (a-1)(a-2)/2 matrices. Throws SizeTooSmall when a < 3.
std::vector<RationalMatrix> block_basis(int a);

/// Derivation basis of A(g) assembled from the large twin classes: each
/// class contributes block_basis(size) on its own diagonal block, and
/// nothing else is nonzero. Graphs with fewer than three vertices are
/// answered by the kernel oracle. Every emitted matrix is re-checked
/// against the Leibniz identity; a failure throws InternalInconsistency.
/// Throws ConnectivityError for disconnected graphs.
ClosedFormBasis closed_form_derivations(const Graph& g);

/// Sum over Gamma3 classes of (a-1)(a-2)/2. Throws ConnectivityError.
std::size_t closed_form_dimension(const Graph& g);

}  // namespace evoder
