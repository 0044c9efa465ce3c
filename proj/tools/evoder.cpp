// evoder: derivation spaces of evolution algebras of graphs.
//
// Exit codes: 0 success, 1 input error, 2 internal inconsistency (closed
// form and kernel disagree, or a reported derivation fails its checks).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "evoder/commands.hpp"
#include "evoder/errors.hpp"
#include "evoder/families.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw evoder::MalformedInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const nlohmann::json& j, const std::string& table, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << table;
  }
}

int document_status(const evoder::ResultDocument& doc) {
  if (doc.agreement && !*doc.agreement) return kInconsistent;
  return doc.properties_passed() ? 0 : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivation spaces of evolution algebras associated to graphs"};
  app.require_subcommand(1);

  std::string input;
  std::string out_format = "table";
  std::string method_text = "both";
  bool raw = false;

  auto* twins = app.add_subcommand("twins", "Twin partition and the twin classes of size >= 3");
  twins->add_option("file", input, "Graph file (edge list or JSON), '-' for stdin")->required();
  twins->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* derive = app.add_subcommand("derive", "Basis of the derivation space");
  derive->add_option("file", input, "Graph file, or structure-matrix CSV with --raw")->required();
  derive->add_option("--method", method_text, "closed-form, oracle, or both")
      ->check(CLI::IsMember({"both", "closed-form", "closed_form", "oracle"}));
  derive->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "table"}));
  derive->add_flag("--raw", raw, "Input is a rational structure matrix (CSV)");

  auto* rank = app.add_subcommand("rank", "Rank of the adjacency or structure matrix");
  rank->add_option("file", input, "Graph file, or structure-matrix CSV with --raw")->required();
  rank->add_flag("--raw", raw, "Input is a rational structure matrix (CSV)");
  rank->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string family_text;
  std::vector<int> family_params;
  std::string emit_path;
  std::string graph_format = "edges";
  auto* family = app.add_subcommand("family", "Generate a named graph family");
  family->add_option("name", family_text, "path | cycle | star | wheel | complete | friendship | multipartite")
      ->required();
  family->add_option("params", family_params,
                     "Vertex count; triangle count for friendship; part sizes for multipartite")
      ->required();
  family->add_option("--emit", emit_path, "Write the graph to this file instead of stdout");
  family->add_option("--format", graph_format, "Graph format")->check(CLI::IsMember({"edges", "json"}));

  evoder::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Cross-check closed form and kernel on every small connected graph");
  verify->add_option("--nmax", verify_options.n_max, "Largest vertex count (3..7)");
  verify->add_flag("--parallel", verify_options.parallel, "Spread graphs over all hardware threads");
  verify->add_flag("--prune", verify_options.prune_isomorphs, "One graph per isomorphism class");
  verify->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*twins) {
      const auto doc = evoder::cmd_twins(evoder::parse_graph(read_input(input)));
      emit(evoder::to_json(doc), evoder::render_table(doc), out_format);
      return 0;
    }
    if (*derive) {
      const auto method = evoder::parse_method(method_text);
      const auto text = read_input(input);
      const auto doc = raw ? evoder::cmd_derive_raw(evoder::StructureMatrix(evoder::parse_matrix_csv(text)), method)
                           : evoder::cmd_derive(evoder::parse_graph(text), method);
      emit(evoder::to_json(doc), evoder::render_table(doc), out_format);
      return document_status(doc);
    }
    if (*rank) {
      const auto text = read_input(input);
      const auto report = raw ? evoder::cmd_rank_raw(evoder::StructureMatrix(evoder::parse_matrix_csv(text)))
                              : evoder::cmd_rank(evoder::parse_graph(text));
      std::ostringstream table;
      table << "n               " << report.n << "\nrank            " << report.rank << "\nnon-singular    "
            << (report.nonsingular ? "yes (derivation space is zero)" : "no") << "\n";
      emit(evoder::to_json(report), table.str(), out_format);
      return 0;
    }
    if (*family) {
      const auto g = evoder::generate_family({evoder::parse_family(family_text), family_params});
      const auto text = graph_format == "json" ? evoder::to_json_text(g) + "\n" : evoder::to_edge_list(g);
      if (emit_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(emit_path);
        if (!out || !(out << text)) throw evoder::MalformedInput("cannot write '" + emit_path + "'");
      }
      return 0;
    }
    if (*verify) {
      const auto report = evoder::cmd_verify(verify_options);
      emit(evoder::to_json(report), evoder::render_table(report), out_format);
      return report.ok() ? 0 : kInconsistent;
    }
  } catch (const evoder::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const evoder::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
