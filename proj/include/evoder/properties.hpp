#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoder/derivation.hpp"
#include "evoder/graph.hpp"
#include "evoder/rational_matrix.hpp"

namespace evoder {

/// Where a check failed. Indices are 1-based vertex labels; `k` is unset
/// when the violated identity involves only a pair.
struct Witness {
  int i = 0;
  int j = 0;
  std::optional<int> k;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  std::string id;
  bool passed = true;
  std::optional<Witness> witness;  // always set when !passed

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct PropertyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
  /// Folds `other` in: checks with the same id are AND-ed, keeping the
  /// first witness; new ids are appended.
  void merge(const PropertyReport& other);

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// d(e_i e_j) == d(e_i) e_j + e_i d(e_j) for every basis pair, evaluated
/// through the algebra product rather than the assembled linear system.
/// Witness (i, j, k): coordinate k of the two sides. Throws
/// DimensionMismatch.
PropertyReport check_leibniz(const StructureMatrix& c, const RationalMatrix& d);

/// Neighborhood conditions every derivation of A(G) satisfies, for i != j:
///   shared_neighbor_skew:     N(i) meets N(j)       => d_ij = -d_ji
///   exclusive_neighbor_zero:  N(i) has k not in N(j) => d_ji = 0
///   disjoint_neighbors_zero:  N(i), N(j) disjoint    => d_ij = d_ji = 0
/// and for all i, j:
///   neighbor_sum:  sum_{k in N(i)} d_kj = (j in N(i) ? 2 d_ii : 0)
PropertyReport check_neighbor_conditions(const Graph& g, const RationalMatrix& d);

/// diagonal_average:     2 deg(i) d_ii = sum_{k in N(i)} d_kk  (deg(i) > 0)
/// twin_diagonal_equal:  i, j twins => d_ii = d_jj
PropertyReport check_diagonal_conditions(const Graph& g, const RationalMatrix& d);

/// For a twin class T:
///   class_cross_zero:            d_ik = d_ki = 0 for i in T, k outside T
///   class_diagonal_zero:         d_ii = 0 for i in T
///   neighborhood_diagonal_zero:  d_ll = 0 for l in N(T)
///   class_skew:                  d_ij = -d_ji for i, j in T
/// Throws InvalidClass if `twin_class` is not a class of twin_partition(g).
PropertyReport check_twin_class_conditions(const Graph& g, std::span<const Vertex> twin_class,
                                           const RationalMatrix& d);

/// Passes iff Gamma3(g) empty implies the basis is empty.
PropertyReport check_zero_without_gamma3(const Graph& g, const DerivationBasis& basis);

nlohmann::json to_json(const CheckResult& check);
nlohmann::json to_json(const PropertyReport& report);
CheckResult check_result_from_json(const nlohmann::json& j);

}  // namespace evoder
