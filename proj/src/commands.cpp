#include "evoder/commands.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "evoder/closed_form.hpp"
#include "evoder/errors.hpp"
#include "evoder/properties.hpp"

namespace evoder {

namespace {

/// Leibniz always; the graph-specific conditions only hold for n >= 3.
PropertyReport full_report(const Graph& g, const StructureMatrix& algebra, const TwinPartition& partition,
                           const RationalMatrix& d) {
  auto report = check_leibniz(algebra, d);
  if (g.size() < 3) return report;
  report.merge(check_neighbor_conditions(g, d));
  report.merge(check_diagonal_conditions(g, d));
  for (const auto& cls : partition.classes) report.merge(check_twin_class_conditions(g, cls, d));
  return report;
}

/// Off-diagonal support must lie inside a single Gamma3 class.
std::string support_violation(const TwinPartition& partition, const RationalMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i == j || sgn(d(i, j)) == 0) continue;
      const auto ci = partition.class_of(static_cast<Vertex>(i));
      if (ci != partition.class_of(static_cast<Vertex>(j)) || partition.classes[ci].size() < 3) {
        return "nonzero entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") outside the large twin classes";
      }
    }
  }
  return {};
}

std::string describe_failure(const std::string& subject, const PropertyReport& report) {
  const auto* f = report.first_failure();
  if (!f) return {};
  std::string s = subject + " fails " + f->id;
  if (f->witness) s += " at (" + std::to_string(f->witness->i) + "," + std::to_string(f->witness->j) + ")";
  return s;
}

}  // namespace

ResultDocument cmd_twins(const Graph& g) {
  ResultDocument doc;
  doc.graph = g;
  doc.partition = twin_partition(g);
  doc.large_classes = gamma3(*doc.partition);
  return doc;
}

ResultDocument cmd_derive(const Graph& g, Method method) {
  const auto algebra = algebra_from_graph(g);
  ResultDocument doc = cmd_twins(g);
  doc.adjacency_rank = rank(algebra.c);
  doc.method = method;

  std::optional<DerivationBasis> oracle;
  if (method != Method::closed_form) oracle = oracle_derivations(algebra);
  if (method != Method::oracle) {
    auto closed = closed_form_derivations(g);
    doc.relabeling = closed.perm;
    doc.basis = std::move(closed.mats);
  } else {
    doc.basis = oracle->mats;
  }
  if (method == Method::both) doc.agreement = same_span(doc.basis, oracle->mats);
  doc.dimension = oracle ? oracle->size() : doc.basis.size();

  for (std::size_t b = 0; b < doc.basis.size(); ++b) {
    doc.property_reports.push_back(
        {"basis[" + std::to_string(b) + "]", full_report(g, algebra, *doc.partition, doc.basis[b])});
  }
  if (g.size() >= 3) {
    doc.property_reports.push_back(
        {"basis", check_zero_without_gamma3(g, DerivationBasis{algebra.size(), doc.basis})});
  }
  return doc;
}

ResultDocument cmd_derive_raw(const StructureMatrix& c, Method method) {
  if (method != Method::oracle) {
    throw MalformedInput("a raw structure matrix only supports the oracle method");
  }
  ResultDocument doc;
  doc.structure = c.c;
  doc.adjacency_rank = rank(c.c);
  doc.method = method;
  doc.basis = oracle_derivations(c).mats;
  doc.dimension = doc.basis.size();
  for (std::size_t b = 0; b < doc.basis.size(); ++b) {
    doc.property_reports.push_back({"basis[" + std::to_string(b) + "]", check_leibniz(c, doc.basis[b])});
  }
  return doc;
}

RankReport cmd_rank_raw(const StructureMatrix& c) {
  const auto r = rank(c.c);
  return {c.size(), r, r == c.size()};
}

RankReport cmd_rank(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  RationalMatrix adjacency(n, n);
  for (const auto& [u, v] : g.edges()) {
    adjacency(u, v) = 1;
    adjacency(v, u) = 1;
  }
  return cmd_rank_raw(StructureMatrix(std::move(adjacency)));
}

nlohmann::json to_json(const RankReport& r) {
  return {{"n", r.n}, {"rank", r.rank}, {"nonsingular", r.nonsingular}, {"zero_derivations_by_rank", r.nonsingular}};
}

GraphOutcome verify_graph(const Graph& g) {
  GraphOutcome out;
  if (g.size() <= kMaxCorpusVertices) out.code = encode(g);
  const auto algebra = algebra_from_graph(g);
  const auto partition = twin_partition(g);
  const auto oracle = oracle_derivations(algebra);
  const auto note = [&out](const std::string& what) {
    if (out.detail.empty()) out.detail = what;
  };

  out.oracle_dimension = oracle.size();
  out.predicted_dimension = closed_form_dimension(g);
  out.gamma3_empty = gamma3(partition).empty();
  out.nonsingular = rank(algebra.c) == algebra.size();

  try {
    out.span_agrees = same_span(closed_form_derivations(g).mats, oracle.mats);
    if (!out.span_agrees) note("closed-form span differs from the kernel");
  } catch (const InternalInconsistency& e) {
    note(e.what());
  }

  out.zero_law_holds = out.gamma3_empty == oracle.empty();
  if (!out.zero_law_holds) note("gamma3 emptiness does not match a zero derivation space");
  out.dimension_law_holds = out.oracle_dimension == out.predicted_dimension;
  if (!out.dimension_law_holds) {
    note("kernel dimension " + std::to_string(out.oracle_dimension) + " != predicted " +
         std::to_string(out.predicted_dimension));
  }

  out.properties_hold = check_zero_without_gamma3(g, oracle).passed();
  if (!out.properties_hold) note("nonzero derivation without a large twin class");
  for (std::size_t b = 0; b < oracle.size(); ++b) {
    const auto subject = "kernel[" + std::to_string(b) + "]";
    const auto report = full_report(g, algebra, partition, oracle.mats[b]);
    const auto support = support_violation(partition, oracle.mats[b]);
    if (!report.passed() || !support.empty()) {
      out.properties_hold = false;
      note(report.passed() ? subject + ": " + support : describe_failure(subject, report));
    }
  }

  out.nonsingular_law_holds = !out.nonsingular || oracle.empty();
  if (!out.nonsingular_law_holds) note("non-singular adjacency with nonzero derivations");
  return out;
}

std::vector<GraphOutcome> verify_all(const std::vector<Graph>& graphs, bool parallel) {
  std::vector<GraphOutcome> outcomes(graphs.size());
  const unsigned workers = parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
  if (workers == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) outcomes[i] = verify_graph(graphs[i]);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < graphs.size(); i = next++) outcomes[i] = verify_graph(graphs[i]);
    });
  }
  pool.clear();  // joins
  return outcomes;
}

std::size_t VerifyReport::graph_count() const {
  std::size_t total = 0;
  for (const auto& t : per_n) total += t.graphs;
  return total;
}

VerifyReport cmd_verify(const VerifyOptions& options) {
  if (options.n_max < 3 || options.n_max > 7) throw MalformedInput("--nmax must be between 3 and 7");
  VerifyReport report;
  report.options = options;
  for (int n = 3; n <= options.n_max; ++n) {
    const auto graphs = options.prune_isomorphs ? connected_unlabeled_graphs(n) : connected_labeled_graphs(n);
    VerifyTotals totals;
    totals.n = n;
    for (auto& outcome : verify_all(graphs, options.parallel)) {
      ++totals.graphs;
      totals.with_gamma3 += !outcome.gamma3_empty;
      totals.nonsingular += outcome.nonsingular;
      totals.span_failures += !outcome.span_agrees;
      totals.zero_law_failures += !outcome.zero_law_holds;
      totals.dimension_law_failures += !outcome.dimension_law_holds;
      totals.property_failures += !outcome.properties_hold;
      totals.nonsingular_failures += !outcome.nonsingular_law_holds;
      if (!outcome.ok()) report.failures.push_back(std::move(outcome));
    }
    report.per_n.push_back(totals);
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const GraphOutcome& a, const GraphOutcome& b) { return a.code < b.code; });
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json per_n = nlohmann::json::array();
  for (const auto& t : report.per_n) {
    per_n.push_back({{"n", t.n},
                     {"graphs", t.graphs},
                     {"with_gamma3", t.with_gamma3},
                     {"nonsingular", t.nonsingular},
                     {"span_failures", t.span_failures},
                     {"zero_law_failures", t.zero_law_failures},
                     {"dimension_law_failures", t.dimension_law_failures},
                     {"property_failures", t.property_failures},
                     {"nonsingular_failures", t.nonsingular_failures}});
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"graph", nlohmann::json::parse(to_json_text(decode(f.code)))}, {"detail", f.detail}});
  }
  return {{"n_max", report.options.n_max},
          {"prune_isomorphs", report.options.prune_isomorphs},
          {"graphs", report.graph_count()},
          {"per_n", per_n},
          {"failures", failures},
          {"ok", report.ok()}};
}

std::string render_table(const VerifyReport& report) {
  std::ostringstream out;
  out << std::setw(3) << "n" << std::setw(9) << "graphs" << std::setw(8) << "gamma3" << std::setw(9)
      << "nonsing" << std::setw(7) << "span" << std::setw(7) << "zero" << std::setw(6) << "dim" << std::setw(7)
      << "props" << std::setw(13) << "nonsing-law" << "\n";
  for (const auto& t : report.per_n) {
    out << std::setw(3) << t.n << std::setw(9) << t.graphs << std::setw(8) << t.with_gamma3 << std::setw(9)
        << t.nonsingular << std::setw(7) << t.span_failures << std::setw(7) << t.zero_law_failures << std::setw(6)
        << t.dimension_law_failures << std::setw(7) << t.property_failures << std::setw(13)
        << t.nonsingular_failures << "\n";
  }
  out << "\n" << report.graph_count() << " graphs"
      << (report.options.prune_isomorphs ? " (one per isomorphism class)" : " (labeled)") << ", "
      << report.failures.size() << " with failures\n";
  for (const auto& f : report.failures) {
    out << "  " << to_json_text(decode(f.code)) << ": " << f.detail << "\n";
  }
  return out.str();
}

}  // namespace evoder
