#include "evoder/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "evoder/errors.hpp"

namespace evoder {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw MalformedInput("vertex count must be positive, got " + std::to_string(n));
  adj_.assign(n, std::vector<bool>(n, false));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw LabelOutOfRange("vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u + 1));
  adj_[u][v] = true;
  adj_[v][u] = true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u][v];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex k = 0; k < n_; ++k)
    if (adj_[v][k]) out.push_back(k);
  return out;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(std::count(adj_[v].begin(), adj_[v].end(), true));
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

const std::vector<bool>& Graph::row(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

Graph Graph::relabeled(const VertexPermutation& perm) const {
  if (perm.size() != n_) throw MalformedInput("permutation size does not match graph");
  Graph out(n_);
  for (const auto& [u, v] : edges()) out.add_edge(perm(u), perm(v));
  return out;
}

VertexPermutation::VertexPermutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw MalformedInput("not a permutation");
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  return VertexPermutation(std::move(image));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<Vertex>(i);
  return VertexPermutation(std::move(inv));
}

bool VertexPermutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Vertex>(i)) return false;
  return true;
}

std::size_t TwinPartition::class_of(Vertex v) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].begin(), classes[c].end(), v)) return c;
  throw LabelOutOfRange("vertex " + std::to_string(v + 1) + " not in partition");
}

namespace {

long parse_int_token(const std::string& token) {
  long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw MalformedInput("expected an integer, got '" + token + "'");
  return value;
}

Graph build_graph(long n, const std::vector<std::pair<long, long>>& edges) {
  if (n < 1) throw MalformedInput("vertex count must be positive");
  Graph g(static_cast<int>(n));
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw LabelOutOfRange("edge " + std::to_string(u) + " " + std::to_string(v) + " outside 1.." +
                            std::to_string(n));
    }
    g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw MalformedInput("empty graph document");
  const long n = parse_int_token(token);
  std::vector<std::pair<long, long>> edges;
  std::string second;
  while (in >> token) {
    if (!(in >> second)) throw MalformedInput("edge line with a single endpoint: '" + token + "'");
    edges.emplace_back(parse_int_token(token), parse_int_token(second));
  }
  return build_graph(n, edges);
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw MalformedInput("JSON graph needs an integer field \"n\"");
  }
  std::vector<std::pair<long, long>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw MalformedInput("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw MalformedInput("each edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<long>(), e[1].get<long>());
    }
  }
  return build_graph(doc["n"].get<long>(), edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(),
                                   [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) throw MalformedInput("empty graph document");
  return *first == '{' ? parse_graph_json(text) : parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string to_json_text(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return nlohmann::json{{"n", g.size()}, {"edges", edges}}.dump();
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.size();
}

TwinPartition twin_partition(const Graph& g) {
  // Vertices are visited in ascending order, so each class is built sorted
  // and classes appear in order of their smallest member.
  std::map<std::vector<bool>, std::size_t> class_by_signature;
  TwinPartition partition;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto [it, inserted] = class_by_signature.try_emplace(g.row(v), partition.classes.size());
    if (inserted) partition.classes.emplace_back();
    partition.classes[it->second].push_back(v);
  }
  return partition;
}

Gamma3 gamma3(const TwinPartition& partition) {
  Gamma3 out;
  int offset = 0;
  for (const auto& cls : partition.classes) {
    if (cls.size() < 3) continue;
    out.classes.push_back(cls);
    out.sizes.push_back(static_cast<int>(cls.size()));
    out.offsets.push_back(offset);
    offset += static_cast<int>(cls.size());
  }
  return out;
}

VertexPermutation block_relabeling(const Graph& g, const Gamma3& large_classes) {
  std::vector<Vertex> image(g.size(), -1);
  Vertex next = 0;
  for (const auto& cls : large_classes.classes)
    for (Vertex v : cls) image[v] = next++;
  for (Vertex v = 0; v < g.size(); ++v)
    if (image[v] < 0) image[v] = next++;
  return VertexPermutation(std::move(image));
}

}  // namespace evoder
