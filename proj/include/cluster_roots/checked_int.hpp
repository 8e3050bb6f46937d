#pragma once

#include <cstdint>

#include "cluster_roots/errors.hpp"

namespace cluster_roots::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("integer overflow narrowing to 64 bits");
  return static_cast<std::int64_t>(v);
}

// [x]_+
inline std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }

}  // namespace cluster_roots::checked
