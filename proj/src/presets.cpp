#include "cluster_roots/presets.hpp"

namespace cluster_roots::presets {

QuiverSpec a2() { return {2, {{1, 2, 1}}}; }
QuiverSpec a3() { return {3, {{1, 2, 1}, {2, 3, 1}}}; }
QuiverSpec a4() { return {4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}}}; }
QuiverSpec d4() { return {4, {{1, 2, 1}, {3, 2, 1}, {4, 2, 1}}}; }
QuiverSpec kronecker() { return {2, {{1, 2, 2}}}; }
QuiverSpec wild112() { return {3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 2}}}; }
QuiverSpec markov() { return {3, {{1, 2, 2}, {2, 3, 2}, {3, 1, 2}}}; }
QuiverSpec atilde2() { return {3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 2}}}; }

namespace {

struct Entry {
  const char* name;
  QuiverSpec (*make)();
};

constexpr Entry kPresets[] = {
    {"a2", a2},           {"a3", a3},         {"a4", a4},         {"d4", d4},
    {"kronecker", kronecker}, {"wild112", wild112}, {"markov", markov}, {"atilde2", atilde2},
};

}  // namespace

std::optional<QuiverSpec> by_name(std::string_view name) {
  for (const auto& e : kPresets)
    if (name == e.name) return e.make();
  return std::nullopt;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : kPresets) out.emplace_back(e.name);
  return out;
}

}  // namespace cluster_roots::presets
