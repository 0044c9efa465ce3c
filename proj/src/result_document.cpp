#include "evoder/result_document.hpp"

#include <algorithm>
#include <sstream>

#include "evoder/errors.hpp"

namespace evoder {

using nlohmann::json;

Method parse_method(std::string_view text) {
  if (text == "closed_form" || text == "closed-form") return Method::closed_form;
  if (text == "oracle") return Method::oracle;
  if (text == "both") return Method::both;
  throw MalformedInput("unknown method '" + std::string(text) + "'");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::oracle: return "oracle";
    case Method::both: return "both";
  }
  return "unknown";
}

bool ResultDocument::properties_passed() const {
  return std::all_of(property_reports.begin(), property_reports.end(),
                     [](const SubjectReport& r) { return r.report.passed(); });
}

namespace {

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> values;
    for (const auto& x : row) values.push_back(parse_rational(x.get<std::string>()));
    rows.push_back(std::move(values));
  }
  return RationalMatrix::from_rows(rows);
}

json classes_to_json(const std::vector<std::vector<Vertex>>& classes) {
  json out = json::array();
  for (const auto& cls : classes) {
    json members = json::array();
    for (Vertex v : cls) members.push_back(v + 1);
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::vector<Vertex>> classes_from_json(const json& j) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& cls : j) {
    std::vector<Vertex> members;
    for (const auto& v : cls) members.push_back(v.get<Vertex>() - 1);
    out.push_back(std::move(members));
  }
  return out;
}

std::string rational_cell(const Rational& x) { return to_string(x); }

}  // namespace

json to_json(const ResultDocument& doc) {
  json j = json::object();
  if (doc.graph) j["graph"] = json::parse(to_json_text(*doc.graph));
  if (doc.structure) j["structure_matrix"] = matrix_to_json(*doc.structure);
  if (doc.partition) j["twin_partition"] = classes_to_json(doc.partition->classes);
  if (doc.large_classes) {
    j["gamma3"] = {{"classes", classes_to_json(doc.large_classes->classes)},
                   {"sizes", doc.large_classes->sizes},
                   {"offsets", doc.large_classes->offsets}};
  }
  if (doc.adjacency_rank) j["adjacency_rank"] = *doc.adjacency_rank;
  if (doc.dimension) j["dimension"] = *doc.dimension;
  if (doc.method) j["method"] = method_name(*doc.method);
  if (doc.agreement) j["agreement"] = *doc.agreement;
  if (doc.relabeling) {
    json image = json::array();
    for (Vertex v : doc.relabeling->image()) image.push_back(v + 1);
    j["relabeling"] = std::move(image);
  }
  json basis = json::array();
  for (const auto& m : doc.basis) basis.push_back(matrix_to_json(m));
  j["basis"] = std::move(basis);
  json reports = json::array();
  for (const auto& r : doc.property_reports) {
    reports.push_back({{"subject", r.subject}, {"checks", to_json(r.report)}});
  }
  j["property_reports"] = std::move(reports);
  return j;
}

ResultDocument result_document_from_json(const json& j) {
  try {
    ResultDocument doc;
    if (j.contains("graph")) doc.graph = parse_graph(j.at("graph").dump());
    if (j.contains("structure_matrix")) doc.structure = matrix_from_json(j.at("structure_matrix"));
    if (j.contains("twin_partition")) doc.partition = TwinPartition{classes_from_json(j.at("twin_partition"))};
    if (j.contains("gamma3")) {
      const auto& g3 = j.at("gamma3");
      doc.large_classes = Gamma3{classes_from_json(g3.at("classes")), g3.at("sizes").get<std::vector<int>>(),
                                 g3.at("offsets").get<std::vector<int>>()};
    }
    if (j.contains("adjacency_rank")) doc.adjacency_rank = j.at("adjacency_rank").get<std::size_t>();
    if (j.contains("dimension")) doc.dimension = j.at("dimension").get<std::size_t>();
    if (j.contains("method")) doc.method = parse_method(j.at("method").get<std::string>());
    if (j.contains("agreement")) doc.agreement = j.at("agreement").get<bool>();
    if (j.contains("relabeling")) {
      std::vector<Vertex> image;
      for (const auto& v : j.at("relabeling")) image.push_back(v.get<Vertex>() - 1);
      doc.relabeling = VertexPermutation(std::move(image));
    }
    for (const auto& m : j.at("basis")) doc.basis.push_back(matrix_from_json(m));
    for (const auto& r : j.at("property_reports")) {
      SubjectReport sr{r.at("subject").get<std::string>(), {}};
      for (const auto& c : r.at("checks")) sr.report.checks.push_back(check_result_from_json(c));
      doc.property_reports.push_back(std::move(sr));
    }
    return doc;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("result document: ") + e.what());
  }
}

std::string render_table(const ResultDocument& doc) {
  std::ostringstream out;
  const auto classes_text = [](const std::vector<std::vector<Vertex>>& classes) {
    std::string s;
    for (const auto& cls : classes) {
      s += "{";
      for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i] + 1);
      s += "} ";
    }
    return s.empty() ? std::string("(none)") : s;
  };

  if (doc.graph) out << "vertices        " << doc.graph->size() << "\nedges           " << doc.graph->edge_count() << "\n";
  if (doc.structure) out << "structure       " << doc.structure->rows() << "x" << doc.structure->cols() << "\n";
  if (doc.partition) out << "twin classes    " << classes_text(doc.partition->classes) << "\n";
  if (doc.large_classes) out << "gamma3          " << classes_text(doc.large_classes->classes) << "\n";
  if (doc.adjacency_rank) out << "rank            " << *doc.adjacency_rank << "\n";
  if (doc.method) out << "method          " << method_name(*doc.method) << "\n";
  if (doc.dimension) out << "dim Der         " << *doc.dimension << "\n";
  if (doc.agreement) out << "agreement       " << (*doc.agreement ? "yes" : "NO") << "\n";
  if (doc.relabeling && !doc.relabeling->is_identity()) {
    out << "relabeling      ";
    for (Vertex v = 0; v < doc.relabeling->size(); ++v) out << v + 1 << "->" << (*doc.relabeling)(v) + 1 << " ";
    out << "\n";
  }

  for (std::size_t b = 0; b < doc.basis.size(); ++b) {
    const auto& m = doc.basis[b];
    std::size_t width = 1;
    for (const auto& x : m.data()) width = std::max(width, rational_cell(x).size());
    out << "\nbasis[" << b << "]\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << "  ";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto cell = rational_cell(m(r, c));
        out << std::string(width - cell.size() + 1, ' ') << cell;
      }
      out << "\n";
    }
  }

  if (!doc.property_reports.empty()) {
    std::size_t failed = 0;
    for (const auto& r : doc.property_reports) {
      for (const auto& c : r.report.checks) {
        if (c.passed) continue;
        ++failed;
        out << "FAILED " << r.subject << " " << c.id;
        if (c.witness) {
          out << " at (" << c.witness->i << "," << c.witness->j;
          if (c.witness->k) out << "," << *c.witness->k;
          out << "): " << to_string(c.witness->lhs) << " != " << to_string(c.witness->rhs);
        }
        out << "\n";
      }
    }
    out << "\nproperty checks " << (failed == 0 ? "all passed" : std::to_string(failed) + " failed") << "\n";
  }
  return out.str();
}

}  // namespace evoder
