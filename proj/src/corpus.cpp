#include "evoder/corpus.hpp"

#include <algorithm>
#include <set>

#include "evoder/errors.hpp"

namespace evoder {

namespace {

using AdjMasks = std::vector<std::uint32_t>;

int pair_index(int n, int u, int v) {
  // Pairs (0,1), (0,2), .., (0,n-1), (1,2), ..
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

int pair_count(int n) { return n * (n - 1) / 2; }

void check_size(int n) {
  if (n < 1 || n > kMaxCorpusVertices) {
    throw MalformedInput("corpus graphs need 1.." + std::to_string(kMaxCorpusVertices) + " vertices");
  }
}

AdjMasks masks_from_code(const GraphCode& code) {
  AdjMasks adj(code.n, 0);
  for (int u = 0; u < code.n; ++u) {
    for (int v = u + 1; v < code.n; ++v) {
      if (code.mask >> pair_index(code.n, u, v) & 1U) {
        adj[u] |= 1U << v;
        adj[v] |= 1U << u;
      }
    }
  }
  return adj;
}

bool connected(const AdjMasks& adj) {
  const int n = static_cast<int>(adj.size());
  const std::uint32_t all = (n == 32) ? ~0U : ((1U << n) - 1);
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1U) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

GraphCode canonical(const AdjMasks& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&adj](int a, int b) {
    return __builtin_popcount(adj[a]) < __builtin_popcount(adj[b]);
  });
  // Split into runs of equal degree; only permutations inside runs are tried.
  std::vector<std::pair<int, int>> runs;
  for (int start = 0; start < n;) {
    int end = start + 1;
    while (end < n && __builtin_popcount(adj[order[end]]) == __builtin_popcount(adj[order[start]])) ++end;
    runs.emplace_back(start, end);
    start = end;
  }

  std::uint64_t best = ~std::uint64_t{0};
  while (true) {
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[order[u]] >> order[v] & 1U) code |= std::uint64_t{1} << pair_index(n, u, v);
    best = std::min(best, code);

    int r = static_cast<int>(runs.size()) - 1;
    for (; r >= 0; --r) {
      const auto [b, e] = runs[r];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (r < 0) break;
  }
  return {n, best};
}

AdjMasks masks_from_graph(const Graph& g) {
  AdjMasks adj(g.size(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  return adj;
}

}  // namespace

GraphCode encode(const Graph& g) {
  check_size(g.size());
  GraphCode code{g.size(), 0};
  for (const auto& [u, v] : g.edges()) code.mask |= std::uint64_t{1} << pair_index(g.size(), u, v);
  return code;
}

Graph decode(const GraphCode& code) {
  check_size(code.n);
  Graph g(code.n);
  for (int u = 0; u < code.n; ++u)
    for (int v = u + 1; v < code.n; ++v)
      if (code.mask >> pair_index(code.n, u, v) & 1U) g.add_edge(u, v);
  return g;
}

std::vector<Graph> connected_labeled_graphs(int n) {
  check_size(n);
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const GraphCode code{n, mask};
    if (connected(masks_from_code(code))) out.push_back(decode(code));
  }
  return out;
}

std::vector<Graph> connected_unlabeled_graphs(int n) {
  check_size(n);
  // All isomorphism classes (connected or not) on k vertices; every graph on
  // k + 1 vertices arises from one of them by adding a vertex.
  std::set<GraphCode> level{GraphCode{1, 0}};
  for (int k = 1; k < n; ++k) {
    std::set<GraphCode> next;
    for (const auto& code : level) {
      const auto base = masks_from_code(code);
      for (std::uint32_t attach = 0; attach < (1U << k); ++attach) {
        AdjMasks adj = base;
        adj.push_back(attach);
        for (int v = 0; v < k; ++v)
          if (attach >> v & 1U) adj[v] |= 1U << k;
        next.insert(canonical(adj));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& code : level)
    if (connected(masks_from_code(code))) out.push_back(decode(code));
  return out;
}

GraphCode canonical_code(const Graph& g) {
  check_size(g.size());
  return canonical(masks_from_graph(g));
}

}  // namespace evoder
