#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluster_roots/quiver.hpp"

namespace cluster_roots::presets {

QuiverSpec a2();
QuiverSpec a3();         // 1 -> 2 -> 3
QuiverSpec a4();         // 1 -> 2 -> 3 -> 4
QuiverSpec d4();         // 1, 3, 4 -> 2
QuiverSpec kronecker();  // 1 => 2
QuiverSpec wild112();    // 1 -> 2, 2 -> 3, 1 => 3
QuiverSpec markov();     // 1 => 2 => 3 => 1
QuiverSpec atilde2();    // 1 -> 2 -> 3 => 1

std::optional<QuiverSpec> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace cluster_roots::presets
