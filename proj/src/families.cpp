#include "evoder/families.hpp"

#include "evoder/errors.hpp"

namespace evoder {

namespace {

int single_param(const FamilySpec& spec, int minimum) {
  if (spec.params.size() != 1) {
    throw InvalidFamilyParams(family_name(spec.family) + " takes exactly one parameter");
  }
  const int value = spec.params.front();
  if (value < minimum) {
    throw InvalidFamilyParams(family_name(spec.family) + " needs a parameter >= " + std::to_string(minimum) +
                              ", got " + std::to_string(value));
  }
  return value;
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "wheel") return Family::wheel;
  if (name == "complete") return Family::complete;
  if (name == "friendship") return Family::friendship;
  if (name == "complete_multipartite" || name == "multipartite") return Family::complete_multipartite;
  throw InvalidFamilyParams("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
    case Family::friendship: return "friendship";
    case Family::complete_multipartite: return "complete_multipartite";
  }
  return "unknown";
}

Graph generate_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: {
      const int n = single_param(spec, 1);
      Graph g(n);
      for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Family::cycle: {
      const int n = single_param(spec, 3);
      Graph g(n);
      for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      return g;
    }
    case Family::star: {
      const int n = single_param(spec, 2);
      Graph g(n);
      for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
      return g;
    }
    case Family::wheel: {
      const int n = single_param(spec, 4);
      Graph g(n);
      const int rim = n - 1;
      for (Vertex v = 0; v < rim; ++v) {
        g.add_edge(v, (v + 1) % rim);
        g.add_edge(v, n - 1);
      }
      return g;
    }
    case Family::complete: {
      const int n = single_param(spec, 1);
      Graph g(n);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::friendship: {
      const int k = single_param(spec, 1);
      Graph g(2 * k + 1);
      for (int t = 0; t < k; ++t) {
        const Vertex a = 2 * t + 1;
        g.add_edge(0, a);
        g.add_edge(0, a + 1);
        g.add_edge(a, a + 1);
      }
      return g;
    }
    case Family::complete_multipartite: {
      if (spec.params.size() < 2) throw InvalidFamilyParams("complete_multipartite needs at least two parts");
      std::vector<int> part_of;
      for (std::size_t p = 0; p < spec.params.size(); ++p) {
        if (spec.params[p] < 1) throw InvalidFamilyParams("complete_multipartite parts must be >= 1");
        part_of.insert(part_of.end(), spec.params[p], static_cast<int>(p));
      }
      Graph g(static_cast<int>(part_of.size()));
      for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
          if (part_of[u] != part_of[v]) g.add_edge(u, v);
      return g;
    }
  }
  throw InvalidFamilyParams("unknown graph family");
}

}  // namespace evoder
