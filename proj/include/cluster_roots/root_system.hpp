#pragma once

#include <cstddef>
#include <cstdint>
#include <set>

#include "cluster_roots/int_matrix.hpp"
#include "cluster_roots/int_vector.hpp"
#include "cluster_roots/quiver.hpp"

namespace cluster_roots {

/// Euler form and symmetric form of an acyclic quiver.
///
///   <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j
///   (d, e) = <d, e> + <e, d>,   q(d) = <d, d>
///
/// `arrows(i, j)` counts arrows i->j, `mult(i, j) = |b(i, j)|`.
class QuiverForms {
 public:
  std::size_t size() const { return arrows_.rows(); }
  const IntMatrix& arrows() const { return arrows_; }
  const IntMatrix& mult() const { return mult_; }

  std::int64_t euler(const IntVector& d, const IntVector& e) const;
  std::int64_t symmetric(const IntVector& d, const IntVector& e) const;

 private:
  friend QuiverForms forms_of(const ExchangeMatrix& b);
  QuiverForms(IntMatrix arrows, IntMatrix mult) : arrows_(std::move(arrows)), mult_(std::move(mult)) {}

  IntMatrix arrows_;
  IntMatrix mult_;
};

/// Throws InvalidQuiver for a quiver with an oriented cycle.
QuiverForms forms_of(const ExchangeMatrix& b);

/// Tits form q(d) = <d, d>.
std::int64_t q(const QuiverForms& f, const IntVector& d);

/// Simple reflection at 1-based vertex i:
/// d_i -> -d_i + sum_{j != i} mult(i, j) d_j, other coordinates unchanged.
IntVector reflect(const QuiverForms& f, const IntVector& d, int i);

/// Height-decreasing reflection descent to a simple root.  At each step the
/// smallest vertex whose reflection strictly lowers the coordinate sum is used.
bool is_positive_real_root(const QuiverForms& f, const IntVector& d);

/// All positive real roots with coordinate sum <= height: the closure of the simple
/// roots under reflections, restricted to nonnegative vectors inside the height bound.
std::set<IntVector> enumerate_positive_real_roots(const QuiverForms& f, std::int64_t height);

}  // namespace cluster_roots
