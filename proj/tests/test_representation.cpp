#include <random>
#include <vector>

#include "doctest.h"

#include "cluster_roots/presets.hpp"
#include "cluster_roots/representation.hpp"

using namespace cluster_roots;

namespace {

std::vector<std::size_t> expanded_sources(const QuiverSpec& q) {
  std::vector<std::size_t> out;
  for (const auto& a : q.arrows)
    for (int m = 0; m < a.multiplicity; ++m) out.push_back(static_cast<std::size_t>(a.source - 1));
  return out;
}

// Counts tuples (f_i) with f_t M_a = N_a f_s for every arrow, by exhaustive
// enumeration over F_p.  Only usable for a handful of unknowns.
std::size_t brute_hom_count(const Representation& m, const Representation& n) {
  const PrimeField& f = m.field;
  const std::uint32_t p = f.characteristic();
  std::vector<std::size_t> offset(m.dims.size() + 1, 0);
  for (std::size_t i = 0; i < m.dims.size(); ++i) offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
  std::vector<std::uint32_t> x(offset.back(), 0);
  // f_i is n.dims[i] x m.dims[i], row-major at offset[i].
  auto fv = [&](std::size_t i, std::size_t r, std::size_t c) { return x[offset[i] + r * m.dims[i] + c]; };
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < m.arrows.size() && ok; ++a) {
      const auto& ma = m.arrows[a];
      const auto& na = n.arrows[a];
      std::size_t s = ma.source, t = ma.target;
      for (std::size_t r = 0; r < n.dims[t] && ok; ++r)
        for (std::size_t c = 0; c < m.dims[s] && ok; ++c) {
          std::uint32_t lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < m.dims[t]; ++k) lhs = f.add(lhs, f.mul(fv(t, r, k), ma.map(k, c)));
          for (std::size_t k = 0; k < n.dims[s]; ++k) rhs = f.add(rhs, f.mul(na.map(r, k), fv(s, k, c)));
          ok = lhs == rhs;
        }
    }
    if (ok) ++count;
    std::size_t j = 0;
    while (j < x.size() && x[j] == p - 1) x[j++] = 0;
    if (j == x.size()) break;
    ++x[j];
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  Representation s;
  s.field = a.field;
  for (std::size_t i = 0; i < a.dims.size(); ++i) s.dims.push_back(a.dims[i] + b.dims[i]);
  for (std::size_t k = 0; k < a.arrows.size(); ++k) {
    const auto& x = a.arrows[k];
    const auto& y = b.arrows[k];
    FpMatrix m(s.dims[x.target], s.dims[x.source]);
    for (std::size_t i = 0; i < x.map.rows(); ++i)
      for (std::size_t j = 0; j < x.map.cols(); ++j) m(i, j) = x.map(i, j);
    for (std::size_t i = 0; i < y.map.rows(); ++i)
      for (std::size_t j = 0; j < y.map.cols(); ++j) m(x.map.rows() + i, x.map.cols() + j) = y.map(i, j);
    s.arrows.push_back({x.source, x.target, m});
  }
  return s;
}

Representation rep(const QuiverSpec& q, const IntVector& d, std::uint32_t p, std::uint64_t seed) {
  return sample_generic_rep(q, d, p, seed).to_representation();
}

}  // namespace

TEST_CASE("sample shapes") {
  RepSample a2 = sample_generic_rep(presets::a2(), {1, 1}, 32003, 1);
  REQUIRE(a2.matrices.size() == 1);
  CHECK(a2.matrices[0].rows() == 1);
  CHECK(a2.matrices[0].cols() == 1);
  RepSample kr = sample_generic_rep(presets::kronecker(), {2, 1}, 32003, 1);
  REQUIRE(kr.matrices.size() == 2);
  for (const auto& m : kr.matrices) {
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 2);
  }
  RepSample w = sample_generic_rep(presets::wild112(), {2, 3, 4}, 101, 3);
  CHECK(w.matrices.size() == 4);
  CHECK(w.matrices[3].rows() == 4);
  CHECK(w.matrices[3].cols() == 2);
}

TEST_CASE("sampling is deterministic in the seed") {
  RepSample x = sample_generic_rep(presets::wild112(), {3, 2, 2}, 32003, 42);
  RepSample y = sample_generic_rep(presets::wild112(), {3, 2, 2}, 32003, 42);
  RepSample z = sample_generic_rep(presets::wild112(), {3, 2, 2}, 32003, 43);
  CHECK(x.matrices == y.matrices);
  CHECK_FALSE(x.matrices == z.matrices);
  for (const auto& m : x.matrices)
    for (auto v : m.data()) CHECK(v < 32003u);
}

TEST_CASE("sampling preconditions") {
  CHECK_THROWS_AS(sample_generic_rep(presets::a2(), {0, 0}, 32003, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_generic_rep(presets::a2(), {1, -1}, 32003, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_generic_rep(presets::a2(), {1, 1, 1}, 32003, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_generic_rep(presets::a2(), {1, 1}, 32001, 1), std::invalid_argument);
}

TEST_CASE("hom_dim examples") {
  RepSample a2 = sample_generic_rep(presets::a2(), {1, 1}, 32003, 1);
  REQUIRE(a2.matrices[0](0, 0) != 0);
  CHECK(hom_dim(a2, a2) == 1);
  CHECK(end_dim(a2) == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    RepSample s = sample_generic_rep(presets::a3(), IntVector::unit(3, i), 32003, 1);
    CHECK(hom_dim(s, s) == 1);
  }
  RepSample zero = a2;
  zero.matrices[0](0, 0) = 0;
  CHECK(hom_dim(zero, zero) == 2);
  CHECK(end_dim(zero) == 2);
}

TEST_CASE("Kronecker (2,1) endomorphism system by hand") {
  // M_a = [1 0], M_b = [0 1]: f_2 M_a = M_a f_1 and f_2 M_b = M_b f_1 force f_1 = f_2 I.
  RepSample s = sample_generic_rep(presets::kronecker(), {2, 1}, 32003, 1);
  s.matrices[0] = FpMatrix(1, 2);
  s.matrices[0](0, 0) = 1;
  s.matrices[1] = FpMatrix(1, 2);
  s.matrices[1](0, 1) = 1;
  CHECK(end_dim(s) == 1);
  // Parallel maps leave a larger algebra.
  s.matrices[1] = s.matrices[0];
  CHECK(end_dim(s) > 1);
}

TEST_CASE("hom_dim agrees with exhaustive counting over F_3") {
  const QuiverSpec quivers[] = {presets::a2(), presets::kronecker(), presets::a3(), presets::wild112()};
  std::mt19937_64 rng(17);
  int compared = 0;
  for (const auto& q : quivers) {
    std::uniform_int_distribution<int> dim(0, 2);
    for (int t = 0; t < 40; ++t) {
      IntVector d(static_cast<std::size_t>(q.n)), e(static_cast<std::size_t>(q.n));
      std::size_t unknowns = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = dim(rng);
        e[i] = dim(rng);
        unknowns += static_cast<std::size_t>(d[i] * e[i]);
      }
      if (d.is_zero() || e.is_zero() || unknowns > 7) continue;
      Representation m = rep(q, d, 3, rng());
      Representation n = rep(q, e, 3, rng());
      CHECK(brute_hom_count(m, n) == ipow(3, hom_dim(m, n)));
      ++compared;
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("reflection reduction preserves End on the wild sample") {
  const QuiverSpec q = presets::wild112();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dim(0, 6);
  int reduced_cases = 0;
  for (int t = 0; t < 150; ++t) {
    IntVector d{dim(rng), dim(rng), dim(rng)};
    if (d.is_zero()) continue;
    Representation m = rep(q, d, 32003, rng());
    // Half the cases are spoilt to be non-generic.
    if (t % 2 && !m.arrows[0].map.data().empty()) m.arrows[0].map = FpMatrix(m.arrows[0].map.rows(), m.arrows[0].map.cols());
    Reduction red = reduce_by_reflections(m);
    std::size_t direct = hom_dim(m, m);
    if (!red.steps.empty()) ++reduced_cases;
    CHECK(hom_dim(red.reduced, red.reduced) == direct);
    CHECK(has_scalar_endomorphisms(m) == (direct == 1));
    if (red.split_simple) CHECK(direct > 1);
  }
  CHECK(reduced_cases > 20);
}

TEST_CASE("a simple summand at a sink or source is detected") {
  const QuiverSpec q = presets::a3();
  Representation m = rep(q, {1, 1, 1}, 32003, 5);
  REQUIRE(hom_dim(m, m) == 1);
  for (std::size_t v : {0u, 2u}) {
    Representation s = rep(q, IntVector::unit(3, v), 32003, 1);
    Representation sum = direct_sum(m, s);
    Reduction red = reduce_by_reflections(sum);
    CHECK(red.split_simple.has_value());
    CHECK_FALSE(has_scalar_endomorphisms(sum));
    // End(M) + End(S) + one map between M and S in one direction.
    CHECK(hom_dim(sum, sum) == 3);
  }
}

TEST_CASE("large Kronecker roots take the reduced route and stay Schur") {
  // (30, 29) has 1741 unknowns, above the direct limit.
  RepSample s = sample_generic_rep(presets::kronecker(), {30, 29}, 32003, 1);
  Representation m = s.to_representation();
  Reduction red = reduce_by_reflections(m);
  CHECK(red.steps.size() == 29);
  CHECK_FALSE(red.split_simple.has_value());
  CHECK(red.reduced.dims == std::vector<std::size_t>({0, 1}));
  CHECK(end_dim(s) == 1);
  CHECK(has_scalar_endomorphisms(m));
}

TEST_CASE("arrow sources are expanded in group order") {
  CHECK(expanded_sources(presets::wild112()) == std::vector<std::size_t>({0, 1, 0, 0}));
  CHECK(sample_generic_rep(presets::wild112(), {1, 1, 1}, 7, 1).to_representation().arrows.size() == 4);
}
