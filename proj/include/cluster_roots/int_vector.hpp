#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace cluster_roots {

/// Integer tuple used for dimension vectors, roots and c-vectors.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : entries_(n, 0) {}
  IntVector(std::initializer_list<std::int64_t> xs) : entries_(xs) {}
  explicit IntVector(std::vector<std::int64_t> xs) : entries_(std::move(xs)) {}

  static IntVector unit(std::size_t n, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::int64_t sum() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;
  IntVector negated() const;

  friend auto operator<=>(const IntVector&, const IntVector&) = default;
  friend bool operator==(const IntVector&, const IntVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

std::string to_string(const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntVector& v);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

}  // namespace cluster_roots
