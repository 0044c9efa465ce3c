#include "evoder/closed_form.hpp"

#include "evoder/errors.hpp"
#include "evoder/properties.hpp"

namespace evoder {

std::vector<RationalMatrix> block_basis(int a) {
  if (a < 3) throw SizeTooSmall("twin block needs at least 3 vertices, got " + std::to_string(a));
  const auto size = static_cast<std::size_t>(a);
  std::vector<RationalMatrix> out;
  for (std::size_t j = 1; j < size; ++j) {
    for (std::size_t k = j + 1; k < size; ++k) {
      RationalMatrix t(size, size);
      const auto set = [&t](std::size_t r, std::size_t c) {
        t(r, c) = 1;
        t(c, r) = -1;
      };
      set(0, j);
      set(j, k);
      set(k, 0);
      out.push_back(std::move(t));
    }
  }
  return out;
}

ClosedFormBasis closed_form_derivations(const Graph& g) {
  if (!is_connected(g)) throw ConnectivityError("graph is not connected");
  const auto n = static_cast<std::size_t>(g.size());
  ClosedFormBasis out;
  out.n = n;
  if (n < 3) {
    out.perm = VertexPermutation::identity(g.size());
    out.mats = oracle_derivations(algebra_from_graph(g)).mats;
    return out;
  }

  const auto large = gamma3(twin_partition(g));
  out.perm = block_relabeling(g, large);
  const auto inverse = out.perm.inverse();
  for (std::size_t l = 0; l < large.classes.size(); ++l) {
    const BlockSpec spec{l, large.offsets[l], large.sizes[l]};
    out.blocks.push_back(spec);
    for (const auto& block : block_basis(spec.size)) {
      // Entry (r, c) of the block sits at relabeled (offset + r, offset + c);
      // pull it back to original labels through the inverse relabeling.
      RationalMatrix d(n, n);
      for (int r = 0; r < spec.size; ++r)
        for (int c = 0; c < spec.size; ++c)
          d(inverse(spec.offset + r), inverse(spec.offset + c)) = block(r, c);
      out.mats.push_back(std::move(d));
    }
  }

  const auto algebra = algebra_from_graph(g);
  for (std::size_t m = 0; m < out.mats.size(); ++m) {
    if (!check_leibniz(algebra, out.mats[m]).passed()) {
      throw InternalInconsistency("closed-form basis element " + std::to_string(m) +
                                  " is not a derivation");
    }
  }
  return out;
}

std::size_t closed_form_dimension(const Graph& g) {
  if (!is_connected(g)) throw ConnectivityError("graph is not connected");
  if (g.size() < 3) return derivation_dimension(algebra_from_graph(g));
  std::size_t total = 0;
  for (int a : gamma3(twin_partition(g)).sizes) total += static_cast<std::size_t>((a - 1) * (a - 2) / 2);
  return total;
}

}  // namespace evoder
