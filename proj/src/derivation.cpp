#include "evoder/derivation.hpp"

#include "evoder/errors.hpp"

namespace evoder {

StructureMatrix::StructureMatrix(RationalMatrix constants) : c(std::move(constants)) {
  if (c.rows() == 0 || c.rows() != c.cols()) {
    throw DimensionMismatch("structure matrix must be square and non-empty, got " +
                            std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
  }
}

AlgebraElement AlgebraElement::basis_vector(std::size_t n, std::size_t i) {
  AlgebraElement e{std::vector<Rational>(n)};
  e.coords.at(i) = 1;
  return e;
}

StructureMatrix algebra_from_graph(const Graph& g) {
  if (!is_connected(g)) throw ConnectivityError("graph is not connected");
  const auto n = static_cast<std::size_t>(g.size());
  RationalMatrix c(n, n);
  for (const auto& [u, v] : g.edges()) {
    c(u, v) = 1;
    c(v, u) = 1;
  }
  return StructureMatrix(std::move(c));
}

AlgebraElement evolution_product(const StructureMatrix& c, const AlgebraElement& u,
                                 const AlgebraElement& v) {
  const std::size_t n = c.size();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("evolution_product: element length differs");
  AlgebraElement out{std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational w = u.coords[i] * v.coords[i];
    if (sgn(w) == 0) continue;
    for (std::size_t k = 0; k < n; ++k) out.coords[k] += w * c.c(i, k);
  }
  return out;
}

AlgebraElement apply_map(const RationalMatrix& d, const AlgebraElement& x) {
  if (d.rows() != x.size() || d.cols() != x.size()) throw DimensionMismatch("apply_map: shape differs");
  AlgebraElement out{std::vector<Rational>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x.coords[i]) == 0) continue;
    for (std::size_t k = 0; k < x.size(); ++k) out.coords[k] += x.coords[i] * d(i, k);
  }
  return out;
}

RationalMatrix build_derivation_system(const StructureMatrix& sm) {
  const std::size_t n = sm.size();
  const auto& c = sm.c;
  const auto unknown = [n](std::size_t i, std::size_t j) { return i * n + j; };

  RationalMatrix system(n * n * (n - 1) + n * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k, ++row) {
        system(row, unknown(i, j)) = c(j, k);
        system(row, unknown(j, i)) = c(i, k);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j, ++row) {
      for (std::size_t k = 0; k < n; ++k) system(row, unknown(k, j)) += c(i, k);
      system(row, unknown(i, i)) -= 2 * c(i, j);
    }
  }
  return system;
}

DerivationBasis oracle_derivations(const StructureMatrix& c) {
  const std::size_t n = c.size();
  DerivationBasis basis{n, {}};
  for (const auto& v : null_space(build_derivation_system(c))) {
    basis.mats.push_back(RationalMatrix::reshaped(v, n, n));
  }
  return basis;
}

std::size_t derivation_dimension(const StructureMatrix& c) { return oracle_derivations(c).size(); }

}  // namespace evoder
