#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>

#include "cluster_roots/int_vector.hpp"
#include "cluster_roots/quiver.hpp"
#include "cluster_roots/representation.hpp"

namespace cluster_roots {

struct OracleParams {
  std::uint32_t trials = 8;
  std::uint32_t prime = 32003;
  std::uint64_t rng_seed = 1;
};

enum class SchurKind {
  certified,              // a sampled representation has End = k and q(d) = 1
  refuted_not_real_root,  // q(d) != 1
  likely_not_schur,       // every sample had a larger endomorphism algebra; not a proof
};

std::string_view to_string(SchurKind kind);

struct SchurVerdict {
  SchurKind kind = SchurKind::likely_not_schur;
  std::optional<RepSample> witness;  // present iff certified
  std::uint32_t trials = 0;          // samples drawn
};

/// Seed of the t-th sample for a given base seed.
std::uint64_t trial_seed(std::uint64_t base, std::uint32_t trial);

/// Throws InvalidQuiver for non-acyclic b and std::invalid_argument for d not
/// nonnegative-nonzero or of the wrong length.
SchurVerdict is_real_schur_root(const ExchangeMatrix& b, const IntVector& d, const OracleParams& params);

struct SchurRootSet {
  std::set<IntVector> certified;
  /// Positive real roots whose samples never certified; excluded from `certified`.
  std::set<IntVector> likely_not_schur;
};

SchurRootSet enumerate_real_schur_roots(const ExchangeMatrix& b, std::int64_t height,
                                        const OracleParams& params);

}  // namespace cluster_roots
