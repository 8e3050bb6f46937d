#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cluster_roots/int_vector.hpp"
#include "cluster_roots/prime_field.hpp"
#include "cluster_roots/quiver.hpp"

namespace cluster_roots {

/// A representation of a quiver over F_p.  Vertices are 0-based here; each arrow
/// instance (multiplicities expanded) carries a dims[target] x dims[source] matrix.
struct Representation {
  struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    FpMatrix map;
  };

  PrimeField field{2};
  std::vector<std::size_t> dims;
  std::vector<Arrow> arrows;

  std::size_t vertex_count() const { return dims.size(); }
  /// Throws std::invalid_argument if a matrix shape disagrees with dims.
  void check_shapes() const;
};

/// A sampled representation with the data needed to reproduce it.
struct RepSample {
  QuiverSpec quiver;
  IntVector d;
  /// One matrix per arrow instance, arrow groups expanded in order.
  std::vector<FpMatrix> matrices;
  std::uint32_t p = 0;
  std::uint64_t rng_seed = 0;

  Representation to_representation() const;
};

/// Entries drawn uniformly from F_p by a generator seeded with rng_seed.
/// Throws std::invalid_argument for d not nonnegative-nonzero, a length mismatch, or
/// p not prime.
RepSample sample_generic_rep(const QuiverSpec& quiver, const IntVector& d, std::uint32_t p,
                             std::uint64_t rng_seed);

/// dim Hom(M, N): the solution space of f_t M_a = N_a f_s over all arrows a: s -> t,
/// with sum_i dim M_i * dim N_i unknowns.
std::size_t hom_dim(const Representation& m, const Representation& n);
std::size_t hom_dim(const RepSample& m, const RepSample& n);

/// Upper bound on the unknown count for which end_dim solves the endomorphism
/// system without reducing first.
inline constexpr std::size_t kDirectEndLimit = 1500;

/// One BGP reflection step applied to a representation.
struct ReflectionStep {
  std::size_t vertex = 0;  // 0-based
  bool at_sink = false;
};

/// Outcome of reducing a representation by sink/source reflection functors.
struct Reduction {
  Representation reduced;
  std::vector<ReflectionStep> steps;
  /// The step that was refused because the representation has a simple summand
  /// at that vertex (its structure map is not injective / surjective).
  std::optional<ReflectionStep> split_simple;
};

/// Repeatedly applies the reflection functor at the smallest vertex that is a sink
/// or source of the support and whose reflection lowers the dimension there.  Every
/// applied step is an equivalence on representations without that simple summand,
/// so End is preserved.  Stops when no such vertex remains or a simple summand is
/// detected.
Reduction reduce_by_reflections(const Representation& m);

/// dim End(M).  Solves the endomorphism system directly when it has at most
/// kDirectEndLimit unknowns, otherwise on the reflection-reduced representation
/// (which has the same endomorphism algebra).
std::size_t end_dim(const Representation& m);
std::size_t end_dim(const RepSample& m);

/// Whether End(M) = k.  Same answer as end_dim(m) == 1, but returns false as soon
/// as a reflection step exposes a simple direct summand.
bool has_scalar_endomorphisms(const Representation& m);

}  // namespace cluster_roots
