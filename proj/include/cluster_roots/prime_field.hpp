#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cluster_roots {

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for an odd or even prime p < 2^31.
class PrimeField {
 public:
  /// Throws std::invalid_argument if p is not a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over F_p with entries canonical in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<std::uint32_t>& data() const { return data_; }

  FpMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

FpMatrix multiply(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);

/// Rank by forward elimination.  Takes the matrix by value; it is consumed.
std::size_t rank(const PrimeField& f, FpMatrix a);

/// Basis of {x : a x = 0}, one basis vector per column of the result
/// (a.cols() x nullity).
FpMatrix nullspace(const PrimeField& f, const FpMatrix& a);

}  // namespace cluster_roots
