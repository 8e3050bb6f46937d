#include "cluster_roots/prime_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cluster_roots {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

FpMatrix multiply(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("F_p product shape mismatch");
  const std::uint64_t p = f.characteristic();
  FpMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = static_cast<std::uint32_t>((r(i, j) + x * b(k, j)) % p);
    }
  return r;
}

namespace {

// Elimination state with lazily reduced rows: a row accumulates (p - f) * pivot
// products in 64 bits and is reduced mod p only when another product could wrap.
class LazyEliminator {
 public:
  LazyEliminator(const PrimeField& f, const FpMatrix& a)
      : p_(f.characteristic()),
        field_(f),
        rows_(a.rows()),
        cols_(a.cols()),
        data_(a.data().begin(), a.data().end()),
        pending_(rows_, 0) {
    const std::uint64_t pm = p_ - 1;
    budget_ = pm == 0 ? UINT64_MAX : (UINT64_MAX - pm) / (pm * pm);
    if (budget_ == 0) budget_ = 1;
  }

  std::uint64_t value(std::size_t i, std::size_t j) const { return data_[i * cols_ + j] % p_; }

  void reduce_row(std::size_t i, std::size_t from) {
    std::uint64_t* r = &data_[i * cols_];
    for (std::size_t j = from; j < cols_; ++j) r[j] %= p_;
    pending_[i] = 0;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
    std::swap(pending_[a], pending_[b]);
  }

  // Scales row i (already reduced from column `from`) so its entry at `from` is 1.
  void normalize(std::size_t i, std::size_t from) {
    const std::uint64_t s = field_.inv(static_cast<std::uint32_t>(data_[i * cols_ + from]));
    std::uint64_t* r = &data_[i * cols_];
    for (std::size_t j = from; j < cols_; ++j) r[j] = r[j] * s % p_;
  }

  // row i -= row[i][col] * row piv, for a normalized, reduced pivot row.
  void eliminate(std::size_t i, std::size_t piv, std::size_t col) {
    const std::uint64_t x = value(i, col);
    if (x == 0) return;
    if (pending_[i] + 1 > budget_) reduce_row(i, col);
    const std::uint64_t m = p_ - x;
    std::uint64_t* r = &data_[i * cols_];
    const std::uint64_t* pr = &data_[piv * cols_];
    for (std::size_t j = col; j < cols_; ++j) r[j] += m * pr[j];
    ++pending_[i];
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Forward (or full, when `jordan`) elimination; returns pivot columns.
  std::vector<std::size_t> run(bool jordan) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t found = rows_;
      for (std::size_t i = row; i < rows_; ++i)
        if (value(i, col) != 0) {
          found = i;
          break;
        }
      if (found == rows_) continue;
      swap_rows(row, found);
      reduce_row(row, col);
      normalize(row, col);
      for (std::size_t i = jordan ? 0 : row + 1; i < rows_; ++i)
        if (i != row) eliminate(i, row, col);
      pivots.push_back(col);
      ++row;
    }
    if (jordan)
      for (std::size_t i = 0; i < rows_; ++i) reduce_row(i, 0);
    return pivots;
  }

 private:
  std::uint64_t p_;
  const PrimeField& field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> data_;
  std::vector<std::uint64_t> pending_;
  std::uint64_t budget_;
};

}  // namespace

std::size_t rank(const PrimeField& f, FpMatrix a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  // Eliminate along the shorter dimension.
  if (a.rows() < a.cols()) a = a.transposed();
  LazyEliminator e(f, a);
  return e.run(false).size();
}

FpMatrix nullspace(const PrimeField& f, const FpMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) {
    FpMatrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i) basis(i, i) = 1;
    return basis;
  }
  LazyEliminator e(f, a);
  const std::vector<std::size_t> pivots = e.run(true);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix basis(n, n - pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto v = static_cast<std::uint32_t>(e.value(r, free));
      basis(pivots[r], out) = f.neg(v);
    }
    ++out;
  }
  return basis;
}

}  // namespace cluster_roots
