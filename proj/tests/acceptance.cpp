// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "evoder/closed_form.hpp"
#include "evoder/commands.hpp"
#include "evoder/corpus.hpp"
#include "evoder/families.hpp"

using namespace evoder;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

Graph family(Family f, std::vector<int> params) { return generate_family({f, std::move(params)}); }

std::string params_text(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

/// Nonincreasing partitions of every total up to `max_sum`, parts >= min_part.
void partitions(int max_sum, int min_part, int largest, std::vector<int>& current,
                const std::function<void(const std::vector<int>&)>& visit) {
  if (!current.empty()) visit(current);
  for (int p = std::min(largest, max_sum); p >= min_part; --p) {
    current.push_back(p);
    partitions(max_sum - p, min_part, p, current, visit);
    current.pop_back();
  }
}

void for_each_partition(int max_sum, int min_part, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  partitions(max_sum, min_part, max_sum, current, visit);
}

struct Corpus {
  std::vector<Graph> graphs;
  std::vector<GraphOutcome> outcomes;
  double n6_seconds = 0;
};

Corpus build_corpus() {
  Corpus corpus;
  for (int n = 3; n <= 7; ++n) {
    auto graphs = n <= 6 ? connected_labeled_graphs(n) : connected_unlabeled_graphs(n);
    const auto start = Clock::now();
    auto outcomes = verify_all(graphs, false);
    if (n == 6) corpus.n6_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (auto& g : graphs) corpus.graphs.push_back(std::move(g));
    for (auto& o : outcomes) corpus.outcomes.push_back(std::move(o));
  }
  return corpus;
}

Outcome zero_fixtures() {
  Outcome out;
  std::vector<std::pair<std::string, Graph>> fixtures;
  for (int n = 3; n <= 12; ++n) fixtures.emplace_back("P" + std::to_string(n), family(Family::path, {n}));
  for (int n = 4; n <= 12; ++n) fixtures.emplace_back("W" + std::to_string(n), family(Family::wheel, {n}));
  fixtures.emplace_back("K9", family(Family::complete, {9}));
  fixtures.emplace_back("F4", family(Family::friendship, {4}));
  for (const auto& [name, g] : fixtures) {
    const auto oracle = oracle_derivations(algebra_from_graph(g));
    const auto closed = closed_form_derivations(g);
    if (!oracle.empty()) out.fail(name + " oracle dimension " + std::to_string(oracle.size()));
    if (!closed.mats.empty() || closed_form_dimension(g) != 0) out.fail(name + " closed form is nonzero");
  }
  return out;
}

Outcome k33_patterns() {
  Outcome out;
  const auto g = family(Family::complete_multipartite, {3, 3});
  const auto oracle = oracle_derivations(algebra_from_graph(g));
  const auto closed = closed_form_derivations(g);

  // alpha = 1, beta = 0 and alpha = 0, beta = 1, as printed.
  RationalMatrix alpha(6, 6), beta(6, 6);
  const int cycle[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      alpha(i, j) = cycle[i][j];
      beta(i + 3, j + 3) = cycle[i][j];
    }
  if (oracle.size() != 2) out.fail("oracle dimension " + std::to_string(oracle.size()));
  if (closed.mats.size() != 2) out.fail("closed-form dimension " + std::to_string(closed.mats.size()));
  if (canonical_span(oracle.mats, 36) != canonical_span({alpha, beta}, 36)) out.fail("oracle span differs");
  if (canonical_span(closed.mats, 36) != canonical_span({alpha, beta}, 36)) out.fail("closed-form span differs");
  return out;
}

Outcome rank_claims(std::string& note) {
  Outcome out;
  for (int n = 3; n <= 12; ++n) {
    const auto r = cmd_rank(family(Family::path, {n})).rank;
    const auto expected = static_cast<std::size_t>(n % 2 == 0 ? n : n - 1);
    if (r != expected) out.fail("rank P" + std::to_string(n) + " = " + std::to_string(r));
  }
  for (int n : {5, 9, 13}) {
    const auto r = cmd_rank(family(Family::wheel, {n})).rank;
    if (r != static_cast<std::size_t>(n - 2)) out.fail("rank W" + std::to_string(n) + " = " + std::to_string(r));
  }
  std::size_t count = 0;
  for_each_partition(12, 1, [&](const std::vector<int>& parts) {
    if (parts.size() < 2) return;  // one part is the edgeless graph
    ++count;
    const auto r = cmd_rank(family(Family::complete_multipartite, parts)).rank;
    if (r != parts.size()) out.fail("rank K_{" + params_text(parts) + "} = " + std::to_string(r));
  });
  note = std::to_string(count) + " multipartite partitions with >= 2 parts";
  return out;
}

Outcome cross_validation(const Corpus& corpus) {
  Outcome out;
  for (const auto& o : corpus.outcomes) {
    if (!o.span_agrees || !o.zero_law_holds) out.fail(to_json_text(decode(o.code)) + ": " + o.detail);
  }
  if (corpus.n6_seconds > 600) out.fail("n = 6 took " + std::to_string(corpus.n6_seconds) + " s");
  return out;
}

Outcome dimension_law(const Corpus& corpus, std::size_t& extras) {
  Outcome out;
  for (const auto& o : corpus.outcomes) {
    if (o.oracle_dimension != o.predicted_dimension) out.fail(to_json_text(decode(o.code)) + ": " + o.detail);
  }
  std::vector<std::pair<std::string, Graph>> graphs;
  graphs.emplace_back("K_{3,4,5}", family(Family::complete_multipartite, {3, 4, 5}));
  for (int a = 1; a <= 9; ++a) graphs.emplace_back("K_{1," + std::to_string(a) + "}", family(Family::star, {a + 1}));
  for_each_partition(12, 3, [&](const std::vector<int>& parts) {
    if (parts.size() >= 2) graphs.emplace_back("K_{" + params_text(parts) + "}", family(Family::complete_multipartite, parts));
  });
  for (const auto& [name, g] : graphs) {
    const auto oracle = derivation_dimension(algebra_from_graph(g));
    std::size_t predicted = 0;
    for (auto a : gamma3(twin_partition(g)).sizes) predicted += static_cast<std::size_t>((a - 1) * (a - 2) / 2);
    if (oracle != predicted) {
      out.fail(name + ": kernel " + std::to_string(oracle) + " != predicted " + std::to_string(predicted));
    }
    if (g.size() >= 3 && closed_form_dimension(g) != predicted) out.fail(name + ": closed_form_dimension mismatch");
  }
  extras = graphs.size();
  return out;
}

Outcome property_battery(const Corpus& corpus) {
  Outcome out;
  for (const auto& o : corpus.outcomes)
    if (!o.properties_hold) out.fail(to_json_text(decode(o.code)) + ": " + o.detail);
  return out;
}

Outcome nonsingular_shortcut(const Corpus& corpus, std::size_t& nonsingular) {
  Outcome out;
  nonsingular = 0;
  for (const auto& o : corpus.outcomes) {
    nonsingular += o.nonsingular;
    if (!o.nonsingular_law_holds) out.fail(to_json_text(decode(o.code)) + ": " + o.detail);
  }
  return out;
}

bool report(int id, const std::string& title, const Outcome& out, const std::string& note) {
  std::cout << (out.passed ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title;
  if (!note.empty()) std::cout << " (" << note << ")";
  if (!out.passed) std::cout << " -- " << out.detail;
  std::cout << std::endl;
  return out.passed;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "zero derivation spaces for P3..P12, W4..W12, K9, F4", zero_fixtures(), "");
  ok &= report(2, "K_{3,3} has dimension 2 spanned by the alpha and beta patterns", k33_patterns(), "");

  std::string rank_note;
  const auto ranks = rank_claims(rank_note);
  ok &= report(3, "adjacency ranks of paths, wheels and complete multipartite graphs", ranks, rank_note);

  const auto start = Clock::now();
  const auto corpus = build_corpus();
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream corpus_note;
  corpus_note.precision(1);
  corpus_note << std::fixed << corpus.graphs.size() << " graphs, n = 6 in " << corpus.n6_seconds
              << " s single-threaded, corpus " << total << " s";
  ok &= report(4, "closed-form span equals kernel span and Gamma3 empty iff dimension 0 on the corpus",
               cross_validation(corpus), corpus_note.str());

  std::size_t extras = 0;
  const auto law = dimension_law(corpus, extras);
  ok &= report(5, "kernel dimension equals the sum over Gamma3 of (a-1)(a-2)/2", law,
               "corpus plus " + std::to_string(extras) + " extra graphs");

  ok &= report(6, "every kernel basis element passes the property battery", property_battery(corpus), "");

  std::size_t nonsingular = 0;
  const auto shortcut = nonsingular_shortcut(corpus, nonsingular);
  ok &= report(7, "non-singular adjacency implies zero derivations", shortcut,
               std::to_string(nonsingular) + " non-singular graphs");
  return ok ? 0 : 1;
}
