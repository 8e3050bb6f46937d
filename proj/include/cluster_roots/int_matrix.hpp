#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "cluster_roots/int_vector.hpp"

namespace cluster_roots {

/// Dense row-major integer matrix with overflow-checked exact arithmetic.
/// Indices are 0-based here; the 1-based convention lives at the quiver level.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;
  const std::vector<std::int64_t>& data() const { return data_; }

  IntMatrix transposed() const;
  IntMatrix negated() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.  When intermediate
/// minors outgrow 128 bits, falls back to CRT over two 62-bit primes if the
/// Hadamard bound shows the result is recoverable; otherwise throws OverflowError.
std::int64_t determinant(const IntMatrix& a);

/// Whether a * b = I, evaluated exactly in 128-bit arithmetic.
bool product_is_identity(const IntMatrix& a, const IntMatrix& b);

/// Exact inverse of a unimodular matrix (det = +-1) by fraction-free Gauss-Jordan
/// on [A | I], with a CRT fallback that is accepted only after an exact check of
/// A * inverse = I.  Throws NonUnimodular otherwise, OverflowError if the inverse
/// does not fit 64 bits.
IntMatrix unimodular_inverse(const IntMatrix& a);

std::string to_string(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace cluster_roots
