#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cluster_roots/int_vector.hpp"
#include "cluster_roots/quiver.hpp"

namespace cluster_roots {

struct SearchOptions {
  /// Hard cap on distinct seeds kept in the visited set.
  std::size_t max_seeds = 2'000'000;
  /// When set, every visited seed is appended as one JSON line {word, b, c}.
  std::ostream* trace = nullptr;
};

enum class StopReason {
  none,        // walked to the requested depth, or closed
  overflow,    // a mutation overflowed 64-bit integers
  seed_cap,    // visited set reached SearchOptions::max_seeds
  target_hit,  // early exit of a membership query
};

std::string_view to_string(StopReason r);

struct SearchReport {
  /// Positive c-vectors mapped to the smallest depth at which they appeared.
  std::map<IntVector, int> positive_c_vectors;
  std::size_t negative_count = 0;
  std::size_t seeds_visited = 0;
  int depth_reached = 0;
  bool closed = false;
  StopReason stop = StopReason::none;
  /// Diagnostic for overflow / cap stops, including the offending word.
  std::string stop_detail;

  std::set<IntVector> positive_set() const;
};

/// Breadth-first walk of the mutation tree from initial_seed(b) up to `depth`.
/// Children are generated by ascending vertex, skipping the mutation that undoes the
/// last one; seeds whose exact (b, c) pair was already seen are pruned.  Every visited
/// seed is checked against the seed invariants (InvariantViolation propagates).
/// `closed` is true when no seed one step past the last layer is new.
SearchReport enumerate_c_vectors(const ExchangeMatrix& b, int depth, const SearchOptions& options = {});

struct MembershipResult {
  /// Targets found (as v or -v) with the depth of first appearance.
  std::map<IntVector, int> found;
  SearchReport search;

  bool complete() const { return search.stop == StopReason::none || search.stop == StopReason::target_hit; }
};

/// Same walk as enumerate_c_vectors, stopping as soon as every target was seen.
MembershipResult find_c_vectors(const ExchangeMatrix& b, const std::set<IntVector>& targets, int depth,
                                const SearchOptions& options = {});

/// Whether v or -v is a column of some c-matrix within depth.  Throws OverflowError
/// if the walk stopped early without a hit, since absence would then be unproven.
bool contains_c_vector(const ExchangeMatrix& b, const IntVector& v, int depth,
                       const SearchOptions& options = {});

enum class TypeVerdict { finite, inconclusive };

std::string_view to_string(TypeVerdict v);

/// finite iff the unbounded walk closes with at most `cap` seeds.
TypeVerdict is_finite_type(const ExchangeMatrix& b, std::size_t cap);

/// Default depths: 8 for n <= 3, 6 for n = 4, 5 beyond.
int default_depth(std::size_t n);

/// Reads a trace written through SearchOptions::trace back into seeds.
std::vector<Seed> read_trace(std::istream& in);

}  // namespace cluster_roots
