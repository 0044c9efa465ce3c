#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoder/corpus.hpp"
#include "evoder/derivation.hpp"
#include "evoder/graph.hpp"
#include "evoder/result_document.hpp"

namespace evoder {

/// Twin partition and Gamma3 of a graph (connectivity not required).
ResultDocument cmd_twins(const Graph& g);

/// Derivation basis of A(g) by the chosen route. With Method::both the
/// basis reported is the closed-form one and `agreement` records whether
/// its span equals the oracle kernel. Every basis element carries a
/// property report. Throws ConnectivityError.
ResultDocument cmd_derive(const Graph& g, Method method);

/// Oracle-only derivation of a raw structure matrix. Throws
/// MalformedInput for any other method, since the closed form needs a
/// graph.
ResultDocument cmd_derive_raw(const StructureMatrix& c, Method method);

struct RankReport {
  std::size_t n = 0;
  std::size_t rank = 0;
  bool nonsingular = false;  // rank == n, so Der(A) = {0}
};

RankReport cmd_rank(const Graph& g);
RankReport cmd_rank_raw(const StructureMatrix& c);
nlohmann::json to_json(const RankReport& r);

/// Outcome of cross-checking one corpus graph.
struct GraphOutcome {
  GraphCode code;  // left empty for graphs beyond kMaxCorpusVertices
  std::size_t oracle_dimension = 0;
  std::size_t predicted_dimension = 0;  // sum over Gamma3 of (a-1)(a-2)/2
  bool gamma3_empty = false;
  bool nonsingular = false;

  bool span_agrees = false;          // closed-form span == kernel span
  bool zero_law_holds = false;       // Gamma3 empty <=> dimension 0
  bool dimension_law_holds = false;  // oracle dimension == prediction
  bool properties_hold = false;      // every kernel basis element passes all checks
  bool nonsingular_law_holds = false;

  std::string detail;  // first problem found, empty when ok()

  bool ok() const {
    return span_agrees && zero_law_holds && dimension_law_holds && properties_hold && nonsingular_law_holds;
  }
};

/// Runs every cross-check on a connected graph with at least 3 vertices.
GraphOutcome verify_graph(const Graph& g);

struct VerifyOptions {
  int n_max = 6;
  bool prune_isomorphs = false;
  bool parallel = false;
};

struct VerifyTotals {
  int n = 0;
  std::size_t graphs = 0;
  std::size_t with_gamma3 = 0;
  std::size_t nonsingular = 0;
  std::size_t span_failures = 0;
  std::size_t zero_law_failures = 0;
  std::size_t dimension_law_failures = 0;
  std::size_t property_failures = 0;
  std::size_t nonsingular_failures = 0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyTotals> per_n;
  std::vector<GraphOutcome> failures;  // sorted by graph code

  bool ok() const { return failures.empty(); }
  std::size_t graph_count() const;
};

/// Applies verify_graph to a list of graphs, in parallel when asked; the
/// outcomes come back in input order.
std::vector<GraphOutcome> verify_all(const std::vector<Graph>& graphs, bool parallel);

/// Every connected graph with 3 <= n <= n_max (labeled, or one per
/// isomorphism class when pruning). Throws MalformedInput unless
/// 3 <= n_max <= 7.
VerifyReport cmd_verify(const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& report);
std::string render_table(const VerifyReport& report);

}  // namespace evoder
