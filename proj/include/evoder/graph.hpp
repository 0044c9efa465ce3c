#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evoder {

/// Vertices are 0-based inside the library; every text format and report
/// uses 1-based labels.
using Vertex = int;

class VertexPermutation;

/// Finite simple undirected graph: symmetric adjacency, no loops.
class Graph {
 public:
  /// Throws MalformedInput when n < 1.
  explicit Graph(int n);

  int size() const { return n_; }

  /// Adds {u, v}; repeated edges collapse. Throws LoopEdge for u == v and
  /// LabelOutOfRange for vertices outside [0, n).
  void add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const;

  /// Sorted neighbor list. Throws LabelOutOfRange.
  std::vector<Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::size_t edge_count() const;

  /// Row of the adjacency matrix; usable as a neighbor-set signature.
  const std::vector<bool>& row(Vertex v) const;

  /// The graph with vertex v renamed to perm(v).
  Graph relabeled(const VertexPermutation& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<std::vector<bool>> adj_;
};

/// Bijection on vertices, stored as old label -> new label.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  /// Throws MalformedInput if `image` is not a permutation of 0..n-1.
  explicit VertexPermutation(std::vector<Vertex> image);

  static VertexPermutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex old_label) const { return image_[old_label]; }
  const std::vector<Vertex>& image() const { return image_; }
  VertexPermutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<Vertex> image_;
};

struct TwinPartition {
  /// Each class sorted ascending; classes ordered by smallest member.
  std::vector<std::vector<Vertex>> classes;

  /// Index into `classes` of the class containing v.
  std::size_t class_of(Vertex v) const;

  friend bool operator==(const TwinPartition&, const TwinPartition&) = default;
};

/// Twin classes with at least three vertices, in partition order, with
/// their sizes and the offsets of their contiguous blocks after
/// block_relabeling.
struct Gamma3 {
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> sizes;
  std::vector<int> offsets;

  bool empty() const { return classes.empty(); }

  friend bool operator==(const Gamma3&, const Gamma3&) = default;
};

/// Edge-list text (`n` then `u v` lines) or JSON `{"n":..,"edges":[[u,v],..]}`,
/// chosen by the first non-blank character. Labels are 1-based.
Graph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_json_text(const Graph& g);

bool is_connected(const Graph& g);

TwinPartition twin_partition(const Graph& g);

Gamma3 gamma3(const TwinPartition& partition);

/// Sends each Gamma3 class onto its block {offset, .., offset + size - 1}
/// in ascending member order; all remaining vertices follow in ascending
/// original order.
VertexPermutation block_relabeling(const Graph& g, const Gamma3& large_classes);

}  // namespace evoder
