#include "evoder/properties.hpp"

#include <algorithm>

#include "evoder/errors.hpp"

namespace evoder {

namespace {

class Check {
 public:
  explicit Check(std::string id) { result_.id = std::move(id); }

  /// Records the first violation only.
  void expect_equal(const Rational& lhs, const Rational& rhs, int i, int j,
                    std::optional<int> k = std::nullopt) {
    if (!result_.passed || lhs == rhs) return;
    result_.passed = false;
    result_.witness = Witness{i + 1, j + 1, k ? std::optional<int>(*k + 1) : std::nullopt, lhs, rhs};
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

void require_square(const RationalMatrix& d, std::size_t n) {
  if (d.rows() != n || d.cols() != n) {
    throw DimensionMismatch("derivation candidate must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
}

bool intersects(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return true;
  return false;
}

bool has_exclusive(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && !b[k]) return true;
  return false;
}

}  // namespace

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* PropertyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

void PropertyReport::merge(const PropertyReport& other) {
  for (const auto& incoming : other.checks) {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&incoming](const CheckResult& c) { return c.id == incoming.id; });
    if (it == checks.end()) {
      checks.push_back(incoming);
    } else if (it->passed && !incoming.passed) {
      *it = incoming;
    }
  }
}

PropertyReport check_leibniz(const StructureMatrix& c, const RationalMatrix& d) {
  const std::size_t n = c.size();
  require_square(d, n);
  Check leibniz("leibniz");
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = AlgebraElement::basis_vector(n, i);
    const auto dei = apply_map(d, ei);
    for (std::size_t j = 0; j < n; ++j) {
      const auto ej = AlgebraElement::basis_vector(n, j);
      const auto lhs = apply_map(d, evolution_product(c, ei, ej));
      const auto a = evolution_product(c, dei, ej);
      const auto b = evolution_product(c, ei, apply_map(d, ej));
      for (std::size_t k = 0; k < n; ++k) {
        leibniz.expect_equal(lhs.coords[k], a.coords[k] + b.coords[k], static_cast<int>(i),
                             static_cast<int>(j), static_cast<int>(k));
      }
    }
  }
  return {{leibniz.take()}};
}

PropertyReport check_neighbor_conditions(const Graph& g, const RationalMatrix& d) {
  const int n = g.size();
  require_square(d, static_cast<std::size_t>(n));
  Check skew("shared_neighbor_skew");
  Check exclusive("exclusive_neighbor_zero");
  Check disjoint("disjoint_neighbors_zero");
  Check sum("neighbor_sum");
  const Rational zero;

  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& ni = g.row(i);
      const auto& nj = g.row(j);
      if (intersects(ni, nj)) {
        skew.expect_equal(d(i, j), -d(j, i), i, j);
      } else {
        disjoint.expect_equal(d(i, j), zero, i, j);
        disjoint.expect_equal(d(j, i), zero, j, i);
      }
      if (has_exclusive(ni, nj)) exclusive.expect_equal(d(j, i), zero, j, i);
    }
  }

  for (Vertex i = 0; i < n; ++i) {
    const auto ni = g.neighbors(i);
    for (Vertex j = 0; j < n; ++j) {
      Rational total;
      for (Vertex k : ni) total += d(k, j);
      const Rational expected = g.adjacent(i, j) ? Rational(2 * d(i, i)) : zero;
      sum.expect_equal(total, expected, i, j);
    }
  }
  return {{skew.take(), exclusive.take(), disjoint.take(), sum.take()}};
}

PropertyReport check_diagonal_conditions(const Graph& g, const RationalMatrix& d) {
  const int n = g.size();
  require_square(d, static_cast<std::size_t>(n));
  Check average("diagonal_average");
  Check twins("twin_diagonal_equal");

  for (Vertex i = 0; i < n; ++i) {
    const int deg = g.degree(i);
    if (deg == 0) continue;
    Rational total;
    for (Vertex k : g.neighbors(i)) total += d(k, k);
    average.expect_equal(2 * deg * d(i, i), total, i, i);
  }
  for (const auto& cls : twin_partition(g).classes) {
    for (std::size_t a = 1; a < cls.size(); ++a) twins.expect_equal(d(cls[0], cls[0]), d(cls[a], cls[a]), cls[0], cls[a]);
  }
  return {{average.take(), twins.take()}};
}

PropertyReport check_twin_class_conditions(const Graph& g, std::span<const Vertex> twin_class,
                                           const RationalMatrix& d) {
  const int n = g.size();
  require_square(d, static_cast<std::size_t>(n));
  std::vector<Vertex> members(twin_class.begin(), twin_class.end());
  std::sort(members.begin(), members.end());
  const auto partition = twin_partition(g);
  if (std::find(partition.classes.begin(), partition.classes.end(), members) == partition.classes.end()) {
    throw InvalidClass("vertex set is not a twin class of the graph");
  }

  std::vector<bool> inside(n, false);
  for (Vertex v : members) inside[v] = true;
  Check cross("class_cross_zero");
  Check diagonal("class_diagonal_zero");
  Check neighborhood("neighborhood_diagonal_zero");
  Check skew("class_skew");
  const Rational zero;

  for (Vertex i : members) {
    for (Vertex k = 0; k < n; ++k) {
      if (inside[k]) continue;
      cross.expect_equal(d(i, k), zero, i, k);
      cross.expect_equal(d(k, i), zero, k, i);
    }
    diagonal.expect_equal(d(i, i), zero, i, i);
    for (Vertex j : members)
      if (i != j) skew.expect_equal(d(i, j), -d(j, i), i, j);
  }
  // Twins share neighborhoods, so N(T) = N(any member).
  for (Vertex l : g.neighbors(members.front())) neighborhood.expect_equal(d(l, l), zero, l, l);
  return {{cross.take(), diagonal.take(), neighborhood.take(), skew.take()}};
}

PropertyReport check_zero_without_gamma3(const Graph& g, const DerivationBasis& basis) {
  CheckResult result{"zero_without_gamma3", true, std::nullopt};
  if (gamma3(twin_partition(g)).empty() && !basis.empty()) {
    result.passed = false;
    // Witness: the first nonzero entry of the first basis element.
    const auto& m = basis.mats.front();
    for (std::size_t i = 0; i < m.rows() && !result.witness; ++i)
      for (std::size_t j = 0; j < m.cols() && !result.witness; ++j)
        if (sgn(m(i, j)) != 0)
          result.witness = Witness{static_cast<int>(i) + 1, static_cast<int>(j) + 1, std::nullopt, m(i, j), 0};
    if (!result.witness) result.witness = Witness{1, 1, std::nullopt, 0, 0};
  }
  return {{result}};
}

nlohmann::json to_json(const CheckResult& check) {
  nlohmann::json j{{"check", check.id}, {"passed", check.passed}, {"witness", nullptr}};
  if (check.witness) {
    const auto& w = *check.witness;
    j["witness"] = {{"i", w.i}, {"j", w.j}, {"lhs", to_string(w.lhs)}, {"rhs", to_string(w.rhs)}};
    if (w.k) j["witness"]["k"] = *w.k;
  }
  return j;
}

nlohmann::json to_json(const PropertyReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : report.checks) out.push_back(to_json(c));
  return out;
}

CheckResult check_result_from_json(const nlohmann::json& j) {
  CheckResult c{j.at("check").get<std::string>(), j.at("passed").get<bool>(), std::nullopt};
  if (const auto& w = j.at("witness"); !w.is_null()) {
    Witness wit{w.at("i").get<int>(), w.at("j").get<int>(), std::nullopt,
                parse_rational(w.at("lhs").get<std::string>()), parse_rational(w.at("rhs").get<std::string>())};
    if (w.contains("k")) wit.k = w.at("k").get<int>();
    c.witness = wit;
  }
  return c;
}

}  // namespace evoder
