#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoder/graph.hpp"
#include "evoder/properties.hpp"
#include "evoder/rational_matrix.hpp"

namespace evoder {

enum class Method { closed_form, oracle, both };

/// Accepts "closed_form", "closed-form", "oracle", "both".
Method parse_method(std::string_view text);
std::string method_name(Method m);

struct SubjectReport {
  std::string subject;  // e.g. "basis[0]" or "basis"
  PropertyReport report;

  friend bool operator==(const SubjectReport&, const SubjectReport&) = default;
};

/// Everything a command reports about one input. Optional members are
/// omitted from the JSON form when unset.
struct ResultDocument {
  std::optional<Graph> graph;
  std::optional<RationalMatrix> structure;  // raw structure-matrix inputs
  std::optional<TwinPartition> partition;
  std::optional<Gamma3> large_classes;
  std::optional<std::size_t> adjacency_rank;
  std::optional<std::size_t> dimension;
  std::optional<Method> method;
  std::optional<bool> agreement;  // set iff method == both
  std::optional<VertexPermutation> relabeling;
  std::vector<RationalMatrix> basis;
  std::vector<SubjectReport> property_reports;

  bool properties_passed() const;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// Rationals are written as "p/q" strings; vertex labels are 1-based.
nlohmann::json to_json(const ResultDocument& doc);
/// Throws MalformedInput on schema violations.
ResultDocument result_document_from_json(const nlohmann::json& j);

std::string render_table(const ResultDocument& doc);

}  // namespace evoder
