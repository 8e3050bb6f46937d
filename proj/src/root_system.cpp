#include "cluster_roots/root_system.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "cluster_roots/checked_int.hpp"
#include "cluster_roots/errors.hpp"

namespace cluster_roots {

namespace {

void require_length(const QuiverForms& f, const IntVector& d) {
  if (d.size() != f.size())
    throw std::invalid_argument("vector " + to_string(d) + " has length " + std::to_string(d.size()) +
                                ", quiver has " + std::to_string(f.size()) + " vertices");
}

}  // namespace

QuiverForms forms_of(const ExchangeMatrix& b) {
  if (!is_acyclic(b)) throw InvalidQuiver("quiver has an oriented cycle; root-system forms need an acyclic quiver");
  const std::size_t n = b.size();
  IntMatrix arrows(n, n), mult(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      arrows(i, j) = checked::pos(b(i, j));
      mult(i, j) = b(i, j) < 0 ? -b(i, j) : b(i, j);
    }
  return QuiverForms(std::move(arrows), std::move(mult));
}

std::int64_t QuiverForms::euler(const IntVector& d, const IntVector& e) const {
  require_length(*this, d);
  require_length(*this, e);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    s = checked::add(s, checked::mul(d[i], e[i]));
    for (std::size_t j = 0; j < size(); ++j)
      if (arrows_(i, j)) s = checked::sub(s, checked::mul(arrows_(i, j), checked::mul(d[i], e[j])));
  }
  return s;
}

std::int64_t QuiverForms::symmetric(const IntVector& d, const IntVector& e) const {
  return checked::add(euler(d, e), euler(e, d));
}

std::int64_t q(const QuiverForms& f, const IntVector& d) { return f.euler(d, d); }

IntVector reflect(const QuiverForms& f, const IntVector& d, int i) {
  require_length(f, d);
  if (i < 1 || static_cast<std::size_t>(i) > f.size())
    throw std::out_of_range("reflection vertex " + std::to_string(i) + " outside 1.." + std::to_string(f.size()));
  const std::size_t ii = static_cast<std::size_t>(i - 1);
  IntVector r = d;
  std::int64_t x = checked::neg(d[ii]);
  for (std::size_t j = 0; j < f.size(); ++j)
    if (j != ii) x = checked::add(x, checked::mul(f.mult()(ii, j), d[j]));
  r[ii] = x;
  return r;
}

bool is_positive_real_root(const QuiverForms& f, const IntVector& d) {
  if (d.size() != f.size() || !d.is_nonnegative() || d.is_zero()) return false;
  IntVector cur = d;
  while (true) {
    if (cur.sum() == 1) return true;  // nonnegative with sum 1: a simple root
    const std::int64_t h = cur.sum();
    bool descended = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      IntVector next = reflect(f, cur, static_cast<int>(i + 1));
      if (next.sum() < h) {
        if (!next.is_nonnegative()) return false;
        cur = std::move(next);
        descended = true;
        break;
      }
    }
    if (!descended) return false;
  }
}

std::set<IntVector> enumerate_positive_real_roots(const QuiverForms& f, std::int64_t height) {
  if (height < 1) throw std::invalid_argument("height must be at least 1");
  const std::size_t n = f.size();
  std::set<IntVector> roots;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e = IntVector::unit(n, i);
    roots.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    IntVector d = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      IntVector r = reflect(f, d, static_cast<int>(i + 1));
      if (!r.is_nonnegative() || r.sum() > height) continue;
      if (roots.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return roots;
}

}  // namespace cluster_roots
