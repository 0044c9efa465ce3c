#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "evoder/graph.hpp"

namespace evoder {

/// Compact encoding of a labeled graph on at most 11 vertices: bit p is set
/// when the p-th pair (u, v), u < v, in lexicographic order is an edge.
struct GraphCode {
  int n = 0;
  std::uint64_t mask = 0;

  friend auto operator<=>(const GraphCode&, const GraphCode&) = default;
};

inline constexpr int kMaxCorpusVertices = 11;

GraphCode encode(const Graph& g);
Graph decode(const GraphCode& code);

/// Every connected simple graph on vertex set {1..n}, one per edge subset,
/// in increasing mask order.
std::vector<Graph> connected_labeled_graphs(int n);

/// One representative per isomorphism class of connected graphs on n
/// vertices, built by vertex extension and deduplicated by canonical code.
std::vector<Graph> connected_unlabeled_graphs(int n);

/// Isomorphism-invariant code: the lexicographically smallest mask over
/// all relabelings that list vertices by nondecreasing degree.
GraphCode canonical_code(const Graph& g);

}  // namespace evoder
