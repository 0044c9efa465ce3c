#pragma once

// Test-only reference computations. Each one reaches its answer by a
// route that does not share code with the path it is used to check.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "evoder/derivation.hpp"
#include "evoder/graph.hpp"
#include "evoder/rational_matrix.hpp"

namespace evoder::testing {

/// Twin classes by pairwise comparison of neighbor sets built from the
/// edge list; classes sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> brute_force_twin_classes(const Graph& g) {
  std::vector<std::set<Vertex>> nbrs(g.size());
  for (const auto& [u, v] : g.edges()) {
    nbrs[u].insert(v);
    nbrs[v].insert(u);
  }
  std::vector<std::vector<Vertex>> classes;
  std::vector<bool> placed(g.size(), false);
  for (Vertex i = 0; i < g.size(); ++i) {
    if (placed[i]) continue;
    std::vector<Vertex> cls;
    for (Vertex j = i; j < g.size(); ++j) {
      if (!placed[j] && nbrs[j] == nbrs[i]) {
        placed[j] = true;
        cls.push_back(j);
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

/// e_i e_j from an explicit n x n x n multiplication table, expanded
/// bilinearly over both arguments.
inline std::vector<Rational> bilinear_product(const StructureMatrix& c, const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) {
  const std::size_t n = c.size();
  std::vector<std::vector<std::vector<Rational>>> table(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) table[i][i][k] = c.c(i, k);
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * table[i][j][k];
  return out;
}

/// dim Der(A) from the Leibniz residual map: D -> (d(e_i e_j) - d(e_i) e_j
/// - e_i d(e_j))_{i,j} is linear in D, so its kernel dimension is n^2 minus
/// the rank of the matrix whose columns are the residuals of the elementary
/// matrices E_ab. Does not use build_derivation_system.
inline std::size_t leibniz_kernel_dimension(const StructureMatrix& c) {
  const std::size_t n = c.size();
  RationalMatrix residuals(n * n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      RationalMatrix e(n, n);
      e(a, b) = 1;
      std::size_t row = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto ei = AlgebraElement::basis_vector(n, i);
          const auto ej = AlgebraElement::basis_vector(n, j);
          const auto lhs = apply_map(e, evolution_product(c, ei, ej));
          const auto r1 = evolution_product(c, apply_map(e, ei), ej);
          const auto r2 = evolution_product(c, ei, apply_map(e, ej));
          for (std::size_t k = 0; k < n; ++k, ++row) {
            residuals(row, a * n + b) = lhs.coords[k] - r1.coords[k] - r2.coords[k];
          }
        }
      }
    }
  }
  return n * n - rank(residuals);
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

inline VertexPermutation random_permutation(std::mt19937& rng, int n) {
  std::vector<Vertex> image(n);
  for (Vertex v = 0; v < n; ++v) image[v] = v;
  std::shuffle(image.begin(), image.end(), rng);
  return VertexPermutation(std::move(image));
}

inline RationalMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& one_based) {
  Graph g(n);
  for (const auto& [u, v] : one_based) g.add_edge(u - 1, v - 1);
  return g;
}

}  // namespace evoder::testing
