#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evoder/graph.hpp"

namespace evoder {

enum class Family { path, cycle, star, wheel, complete, friendship, complete_multipartite };

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

/// Accepts the enum spellings plus "multipartite". Throws
/// InvalidFamilyParams for unknown names.
Family parse_family(std::string_view name);
std::string family_name(Family f);

/// Labelings:
///   path n          1-2-...-n
///   cycle n         path plus n-1 (n >= 3)
///   star n          n vertices, center 1, leaves 2..n (n >= 2)
///   wheel n         cycle on 1..n-1, center n joined to all (n >= 4)
///   complete n      all pairs
///   friendship k    k triangles sharing center 1: {1, 2t, 2t+1}, 2k+1 vertices
///   complete_multipartite a1 .. am   parts of consecutive labels in the
///                   given order (m >= 2, every part >= 1)
/// Throws InvalidFamilyParams for a wrong parameter count or range.
Graph generate_family(const FamilySpec& spec);

}  // namespace evoder
