#include "cluster_roots/int_vector.hpp"

#include <algorithm>
#include <sstream>

#include "cluster_roots/checked_int.hpp"

namespace cluster_roots {

IntVector IntVector::unit(std::size_t n, std::size_t index) {
  IntVector v(n);
  v[index] = 1;
  return v;
}

std::int64_t IntVector::sum() const {
  std::int64_t s = 0;
  for (auto x : entries_) s = checked::add(s, x);
  return s;
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x == 0; });
}

bool IntVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x >= 0; });
}

bool IntVector::is_nonpositive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x <= 0; });
}

IntVector IntVector::negated() const {
  IntVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::neg(entries_[i]);
  return r;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : v) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cluster_roots
