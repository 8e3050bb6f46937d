#include "cluster_roots/quiver.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "cluster_roots/checked_int.hpp"
#include "cluster_roots/errors.hpp"

namespace cluster_roots {

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
  if (b_.rows() == 0) throw InvalidQuiver("exchange matrix needs at least one vertex");
  if (!b_.is_square()) throw InvalidQuiver("exchange matrix must be square");
  const std::size_t n = b_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b_(i, i) != 0) throw InvalidQuiver("loop at vertex " + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < n; ++j)
      if (b_(i, j) != -b_(j, i))
        throw InvalidQuiver("matrix is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
  }
}

ExchangeMatrix ExchangeMatrix::transposed() const { return ExchangeMatrix(b_.transposed()); }

ExchangeMatrix from_arrows(const QuiverSpec& spec) {
  if (spec.n < 1) throw InvalidQuiver("quiver needs at least one vertex");
  const auto n = static_cast<std::size_t>(spec.n);
  IntMatrix b(n, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& a : spec.arrows) {
    if (a.source < 1 || a.source > spec.n || a.target < 1 || a.target > spec.n)
      throw InvalidQuiver("arrow endpoint out of range 1.." + std::to_string(spec.n));
    if (a.multiplicity < 1) throw InvalidQuiver("arrow multiplicity must be at least 1");
    if (a.source == a.target) throw InvalidQuiver("loop at vertex " + std::to_string(a.source));
    if (!seen.emplace(a.source, a.target).second)
      throw InvalidQuiver("duplicate arrow entry " + std::to_string(a.source) + "->" + std::to_string(a.target));
    if (seen.count({a.target, a.source}))
      throw InvalidQuiver("2-cycle between vertices " + std::to_string(a.source) + " and " +
                          std::to_string(a.target));
    const std::size_t i = a.source - 1, j = a.target - 1;
    b(i, j) = a.multiplicity;
    b(j, i) = -a.multiplicity;
  }
  return ExchangeMatrix(std::move(b));
}

QuiverSpec to_arrows(const ExchangeMatrix& b) {
  QuiverSpec spec;
  spec.n = static_cast<int>(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b(i, j) > 0) spec.arrows.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(b(i, j))});
  return spec;
}

bool is_acyclic(const ExchangeMatrix& b) {
  // Kahn's algorithm on the graph with an edge i->j whenever b(i, j) > 0.
  const std::size_t n = b.size();
  std::vector<int> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) > 0) ++indegree[j];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) > 0 && --indegree[j] == 0) ready.push_back(j);
  }
  return removed == n;
}

Seed initial_seed(const ExchangeMatrix& b) {
  const std::size_t n = b.size();
  return Seed{b, IntMatrix::identity(n), IntMatrix::identity(n), {}};
}

namespace {

// x + [a]_+ [b]_+ - [-a]_+ [-b]_+
std::int64_t mutated_entry(std::int64_t x, std::int64_t a, std::int64_t b) {
  using namespace checked;
  return sub(add(x, mul(pos(a), pos(b))), mul(pos(neg(a)), pos(neg(b))));
}

}  // namespace

Seed mutate(const Seed& s, int k) {
  const std::size_t n = s.size();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw std::out_of_range("mutation vertex " + std::to_string(k) + " outside 1.." + std::to_string(n));
  const std::size_t kk = static_cast<std::size_t>(k - 1);

  std::vector<int> word = s.word;
  word.push_back(k);

  // Rows 0..n-1 of the stacked matrix are B, rows n..2n-1 are C; the pivot row
  // M[k][*] is always taken from the B block.
  const IntMatrix& b = s.b.matrix();
  IntMatrix nb(n, n), nc(n, n);
  try {
    for (std::size_t r = 0; r < 2 * n; ++r) {
      const bool in_b = r < n;
      const std::size_t rr = in_b ? r : r - n;
      const IntMatrix& src = in_b ? b : s.c;
      IntMatrix& dst = in_b ? nb : nc;
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t x = src(rr, j);
        if ((in_b && rr == kk) || j == kk)
          dst(rr, j) = checked::neg(x);
        else
          dst(rr, j) = mutated_entry(x, src(rr, kk), b(kk, j));
      }
    }
  } catch (const OverflowError&) {
    throw OverflowError("c-matrix entries exceed 64 bits", word);
  }

  Seed out{ExchangeMatrix(std::move(nb)), std::move(nc), IntMatrix(), std::move(word)};
  try {
    out.g = g_from_c(out.c);
    check_seed_invariants(out);
  } catch (const NonUnimodular& e) {
    throw InvariantViolation(std::string("c-matrix lost unimodularity: ") + e.what(), out.word);
  } catch (const OverflowError& e) {
    if (!e.word().empty()) throw;
    throw OverflowError("g-matrix arithmetic exceeds 64 bits", out.word);
  }
  return out;
}

Seed mutate_word(const Seed& s, const std::vector<int>& word) {
  Seed cur = s;
  for (int k : word) cur = mutate(cur, k);
  return cur;
}

bool is_sign_coherent(const IntMatrix& c) {
  for (std::size_t j = 0; j < c.cols(); ++j) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      pos |= c(i, j) > 0;
      neg |= c(i, j) < 0;
    }
    if (pos == neg) return false;  // mixed, or a zero column
  }
  return true;
}

IntMatrix g_from_c(const IntMatrix& c) { return unimodular_inverse(c).transposed(); }

void check_seed_invariants(const Seed& s) {
  const std::size_t n = s.size();
  if (s.c.rows() != n || s.c.cols() != n || s.g.rows() != n || s.g.cols() != n)
    throw InvariantViolation("seed matrices have inconsistent shapes", s.word);
  const IntMatrix& b = s.b.matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) != -b(j, i)) throw InvariantViolation("exchange matrix lost skew-symmetry", s.word);
  if (!product_is_identity(s.g.transposed(), s.c))
    throw InvariantViolation("transpose(G) * C is not the identity", s.word);
  try {
    const std::int64_t det = determinant(s.c);
    if (det != 1 && det != -1)
      throw InvariantViolation("det(C) = " + std::to_string(det) + ", expected +-1", s.word);
  } catch (const OverflowError&) {
    // det(C) det(G) = 1 over the integers already follows from the exact duality.
  }
  if (!is_sign_coherent(s.c)) throw InvariantViolation("c-matrix is not sign-coherent", s.word);
}

}  // namespace cluster_roots
