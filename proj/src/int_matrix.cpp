#include "cluster_roots/int_matrix.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cluster_roots/checked_int.hpp"
#include "cluster_roots/errors.hpp"

namespace cluster_roots {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  IntVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix t(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) t.data_[i] = checked::neg(data_[i]);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = checked::add(s, checked::mul(a(i, k), b(k, j)));
      r(i, j) = s;
    }
  return r;
}

namespace {

// Row-major working copy in 128-bit so the cross products of one Bareiss step
// cannot wrap before the exact division brings them back down.
struct Work {
  std::size_t rows, cols;
  std::vector<__int128> a;
  __int128& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

__int128 checked_cross(__int128 pivot, __int128 x, __int128 lead, __int128 y) {
  __int128 p, q, r;
  if (__builtin_mul_overflow(pivot, x, &p) || __builtin_mul_overflow(lead, y, &q) ||
      __builtin_sub_overflow(p, q, &r))
    throw OverflowError("integer overflow in fraction-free elimination");
  return r;
}

void bareiss_step(Work& w, std::size_t k, __int128 prev, bool jordan) {
  const __int128 pivot = w.at(k, k);
  for (std::size_t i = jordan ? 0 : k + 1; i < w.rows; ++i) {
    if (i == k) continue;
    const __int128 lead = w.at(i, k);
    for (std::size_t j = jordan ? 0 : k + 1; j < w.cols; ++j) {
      if (j == k) continue;
      const __int128 num = checked_cross(pivot, w.at(i, j), lead, w.at(k, j));
      if (num % prev != 0) throw std::logic_error("inexact division in fraction-free elimination");
      w.at(i, j) = num / prev;
    }
    w.at(i, k) = 0;
  }
}

bool pivot_down(Work& w, std::size_t k, std::size_t n) {
  if (w.at(k, k) != 0) return false;
  for (std::size_t r = k + 1; r < n; ++r) {
    if (w.at(r, k) != 0) {
      for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(k, j), w.at(r, j));
      return true;
    }
  }
  throw std::domain_error("singular");
}


// Residues modulo two primes below 2^62.  Their product exceeds 2^123, so any
// value of magnitude below 2^122 is recovered exactly by CRT.
constexpr std::uint64_t kP1 = 4611686018427387847ULL;
constexpr std::uint64_t kP2 = 4611686018427387817ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t reduce(std::int64_t x, std::uint64_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

__int128 crt(std::uint64_t r1, std::uint64_t r2) {
  const std::uint64_t t = mulmod((r2 + kP2 - r1 % kP2) % kP2, powmod(kP1 % kP2, kP2 - 2, kP2), kP2);
  const unsigned __int128 m = static_cast<unsigned __int128>(kP1) * kP2;
  unsigned __int128 x = r1 + static_cast<unsigned __int128>(kP1) * t;
  return x > m / 2 ? -static_cast<__int128>(m - x) : static_cast<__int128>(x);
}

// Gauss-Jordan over F_p.  Returns det mod p and, when it is nonzero, fills inv.
std::uint64_t solve_mod(const IntMatrix& m, std::uint64_t p, std::vector<std::uint64_t>* inv) {
  const std::size_t n = m.rows(), w = 2 * n;
  std::vector<std::uint64_t> a(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = reduce(m(i, j), p);
    a[i * w + n + i] = 1;
  }
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r * w + k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (std::size_t j = 0; j < w; ++j) std::swap(a[k * w + j], a[r * w + j]);
      det = p - det;
    }
    det = mulmod(det, a[k * w + k], p);
    const std::uint64_t pinv = powmod(a[k * w + k], p - 2, p);
    for (std::size_t j = 0; j < w; ++j) a[k * w + j] = mulmod(a[k * w + j], pinv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i * w + k] == 0) continue;
      const std::uint64_t f = a[i * w + k];
      for (std::size_t j = 0; j < w; ++j) a[i * w + j] = (a[i * w + j] + p - mulmod(f, a[k * w + j], p)) % p;
    }
  }
  if (inv) {
    inv->resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) (*inv)[i * n + j] = a[i * w + n + j];
  }
  return det % p;
}

// Hadamard bound on |det m|, as a floating-point estimate.
long double hadamard_bound(const IntMatrix& m) {
  long double h = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    long double norm2 = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) norm2 += static_cast<long double>(m(i, j)) * m(i, j);
    h *= std::sqrt(norm2);
  }
  return h;
}

bool is_identity_product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        __int128 t;
        if (__builtin_mul_overflow(static_cast<__int128>(a(i, k)), static_cast<__int128>(b(k, j)), &t) ||
            __builtin_add_overflow(acc, t, &acc))
          return false;
      }
      if (acc != (i == j ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace

std::int64_t determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  try {
    Work w{n, n, std::vector<__int128>(m.data().begin(), m.data().end())};
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
      try {
        if (pivot_down(w, k, n)) sign = -sign;
      } catch (const std::domain_error&) {
        return 0;
      }
      bareiss_step(w, k, prev, false);
      prev = w.at(k, k);
    }
    return checked::narrow(sign * w.at(n - 1, n - 1));
  } catch (const OverflowError&) {
    // Intermediate minors too wide; fall back to CRT when the result provably fits.
    const std::uint64_t d1 = solve_mod(m, kP1, nullptr), d2 = solve_mod(m, kP2, nullptr);
    if (hadamard_bound(m) < 0x1p121L) return checked::narrow(crt(d1, d2));
    // An exactly verified integer inverse proves det = +-1; the residue gives the sign.
    if (d1 == 1 || d1 == kP1 - 1) {
      try {
        unimodular_inverse(m);
        return d1 == 1 ? 1 : -1;
      } catch (const std::exception&) {
      }
    }
    throw;
  }
}

bool product_is_identity(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) return false;
  return is_identity_product(a, b);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw NonUnimodular("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  try {
    Work w{n, 2 * n, std::vector<__int128>(2 * n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w.at(i, j) = m(i, j);
      w.at(i, n + i) = 1;
    }
    __int128 prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
      try {
        pivot_down(w, k, n);
      } catch (const std::domain_error&) {
        throw NonUnimodular("singular matrix has no integer inverse");
      }
      bareiss_step(w, k, prev, true);
      prev = w.at(k, k);
    }
    // Left block is now prev * I and the right block prev * inverse.
    if (prev != 1 && prev != -1) throw NonUnimodular("determinant is not +-1");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = checked::narrow(w.at(i, n + j) * prev);
    return inv;
  } catch (const OverflowError&) {
    // Intermediate minors too wide.  det = +-1 forces det = +-1 mod each prime;
    // the CRT candidate is then accepted only if m * inv = I holds exactly.
    std::vector<std::uint64_t> r1, r2;
    const std::uint64_t d1 = solve_mod(m, kP1, &r1), d2 = solve_mod(m, kP2, &r2);
    if ((d1 != 1 && d1 != kP1 - 1) || (d2 != 1 && d2 != kP2 - 1)) throw NonUnimodular("determinant is not +-1");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const __int128 x = crt(r1[i], r2[i]);
      if (x > INT64_MAX || x < INT64_MIN) throw OverflowError("inverse entries exceed 64 bits");
      inv(i / n, i % n) = static_cast<std::int64_t>(x);
    }
    if (!is_identity_product(m, inv)) throw OverflowError("inverse entries exceed 64 bits");
    return inv;
  }
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace cluster_roots
