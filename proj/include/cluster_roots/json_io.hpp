#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cluster_roots/int_matrix.hpp"
#include "cluster_roots/int_vector.hpp"
#include "cluster_roots/mutation_search.hpp"
#include "cluster_roots/quiver.hpp"
#include "cluster_roots/schur_oracle.hpp"
#include "cluster_roots/verification.hpp"

namespace cluster_roots {

/// Documents keep insertion order so machine output is stable and diffable.
using Json = nlohmann::ordered_json;

/// Accepts {"n": N, "arrows": [[i, j, mult], ...]} or {"matrix": [[...], ...]}.
/// Throws InvalidQuiver with a diagnostic for anything else.
ExchangeMatrix parse_quiver(const Json& doc);
ExchangeMatrix parse_quiver_text(std::string_view text);

/// "1,2,1", "1 2 1" or "[1,2,1]"; the empty string is the empty vector.
std::vector<std::int64_t> parse_int_list(std::string_view text);

Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const ExchangeMatrix& b);
Json seed_to_json(const Seed& s);
Json to_json(const SearchReport& r);
Json to_json(const SchurVerdict& v, const IntVector& d);
Json to_json(const TheoremReport& r);
Json to_json(const AbsenceReport& r);
Json to_json(const RepSample& s);

IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

}  // namespace cluster_roots
