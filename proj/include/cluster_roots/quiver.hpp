#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cluster_roots/int_matrix.hpp"
#include "cluster_roots/int_vector.hpp"

namespace cluster_roots {

/// One arrow group of a quiver: `multiplicity` arrows source -> target.  1-based vertices.
struct ArrowGroup {
  int source = 0;
  int target = 0;
  int multiplicity = 1;

  friend bool operator==(const ArrowGroup&, const ArrowGroup&) = default;
};

/// Quiver as a list of arrow groups.  Loops and 2-cycles are rejected when it is
/// converted to an exchange matrix.
struct QuiverSpec {
  int n = 0;
  std::vector<ArrowGroup> arrows;

  friend bool operator==(const QuiverSpec&, const QuiverSpec&) = default;
};

/// Skew-symmetric integer matrix of a loop-free, 2-cycle-free quiver.
/// Entry b(i, j) = #(arrows i->j) - #(arrows j->i), with 0-based storage.
class ExchangeMatrix {
 public:
  /// Validates skew-symmetry and n >= 1; throws InvalidQuiver.
  explicit ExchangeMatrix(IntMatrix b);

  std::size_t size() const { return b_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return b_(i, j); }
  const IntMatrix& matrix() const { return b_; }

  /// Same quiver read with the opposite arrow convention (B^T = -B).
  ExchangeMatrix transposed() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  IntMatrix b_;
};

ExchangeMatrix from_arrows(const QuiverSpec& spec);

/// Arrow groups i->j for every positive entry b(i, j), in row-major order.
QuiverSpec to_arrows(const ExchangeMatrix& b);

bool is_acyclic(const ExchangeMatrix& b);

/// Seed with principal coefficients.  Column j of `c` is the j-th c-vector, column j
/// of `g` the j-th g-vector.  `word` holds the 1-based vertices mutated so far.
struct Seed {
  ExchangeMatrix b;
  IntMatrix c;
  IntMatrix g;
  std::vector<int> word;

  std::size_t size() const { return b.size(); }
  IntVector c_vector(std::size_t j) const { return c.column(j); }
  IntVector g_vector(std::size_t j) const { return g.column(j); }
};

Seed initial_seed(const ExchangeMatrix& b);

/// Mutation at 1-based vertex k.  B and C mutate together as the stacked 2n x n
/// matrix [B; C]; G is recomputed as transpose(inverse(C)).  The result is checked
/// against every seed invariant.
///
/// Throws std::out_of_range for a bad k, OverflowError (carrying the extended word)
/// on 64-bit overflow, InvariantViolation if an invariant fails.
Seed mutate(const Seed& s, int k);

/// Applies the letters of `word` in order.
Seed mutate_word(const Seed& s, const std::vector<int>& word);

/// Every column entrywise >= 0 or entrywise <= 0, and no column zero.
bool is_sign_coherent(const IntMatrix& c);

/// transpose(inverse(c)); throws NonUnimodular when det(c) != +-1.
IntMatrix g_from_c(const IntMatrix& c);

/// Throws InvariantViolation naming the seed word on the first failed invariant:
/// skew-symmetry, det(c) = +-1, transpose(g) * c = I, sign-coherence.
void check_seed_invariants(const Seed& s);

}  // namespace cluster_roots
