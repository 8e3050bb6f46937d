#include <random>
#include <vector>

#include "doctest.h"

#include "cluster_roots/errors.hpp"
#include "cluster_roots/presets.hpp"
#include "cluster_roots/quiver.hpp"

using namespace cluster_roots;

namespace {

int sgn(std::int64_t x) { return (x > 0) - (x < 0); }
std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }

// Fomin-Zelevinsky form of the mutation rule on the principal extension:
// x'_ij = -x_ij if i = k or j = k, else x_ij + sgn(x_ik) [x_ik b_kj]_+.
// Written independently of the stacked-matrix implementation.
void fz_mutate(IntMatrix& b, IntMatrix& c, std::size_t k) {
  const std::size_t n = b.rows();
  IntMatrix nb = b, nc = c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k)
        nb(i, j) = -b(i, j);
      else
        nb(i, j) = b(i, j) + sgn(b(i, k)) * pos(b(i, k) * b(k, j));
      if (j == k)
        nc(i, j) = -c(i, j);
      else
        nc(i, j) = c(i, j) + sgn(c(i, k)) * pos(c(i, k) * b(k, j));
    }
  b = nb;
  c = nc;
}

ExchangeMatrix random_quiver(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b(i, j) = entry(rng);
      b(j, i) = -b(i, j);
    }
  return ExchangeMatrix(b);
}

}  // namespace

TEST_CASE("from_arrows examples") {
  CHECK(from_arrows(presets::markov()).matrix() == IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
  CHECK(from_arrows(presets::atilde2()).matrix() == IntMatrix{{0, 1, -2}, {-1, 0, 1}, {2, -1, 0}});
  CHECK(from_arrows(QuiverSpec{2, {}}).matrix() == IntMatrix(2, 2));
}

TEST_CASE("from_arrows rejects malformed quivers") {
  CHECK_THROWS_AS(from_arrows(QuiverSpec{0, {}}), InvalidQuiver);
  CHECK_THROWS_AS(from_arrows(QuiverSpec{2, {{1, 1, 1}}}), InvalidQuiver);
  CHECK_THROWS_AS(from_arrows(QuiverSpec{2, {{1, 2, 1}, {2, 1, 1}}}), InvalidQuiver);
  CHECK_THROWS_AS(from_arrows(QuiverSpec{2, {{1, 2, 1}, {1, 2, 1}}}), InvalidQuiver);
  CHECK_THROWS_AS(from_arrows(QuiverSpec{2, {{1, 3, 1}}}), InvalidQuiver);
  CHECK_THROWS_AS(from_arrows(QuiverSpec{2, {{1, 2, 0}}}), InvalidQuiver);
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}), InvalidQuiver);
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{1, 0}, {0, 0}}), InvalidQuiver);
}

TEST_CASE("to_arrows round-trips") {
  for (const auto& name : presets::names()) {
    ExchangeMatrix b = from_arrows(*presets::by_name(name));
    CHECK(from_arrows(to_arrows(b)) == b);
  }
}

TEST_CASE("is_acyclic examples") {
  CHECK(is_acyclic(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}})));
  CHECK_FALSE(is_acyclic(from_arrows(presets::markov())));
  CHECK_FALSE(is_acyclic(from_arrows(presets::atilde2())));
  CHECK(is_acyclic(ExchangeMatrix(IntMatrix(4, 4))));
  CHECK(is_acyclic(from_arrows(presets::wild112())));
  CHECK(is_acyclic(from_arrows(presets::d4())));
}

TEST_CASE("initial_seed examples") {
  Seed a2 = initial_seed(from_arrows(presets::a2()));
  CHECK(a2.c == IntMatrix::identity(2));
  CHECK(a2.g == IntMatrix::identity(2));
  CHECK(a2.word.empty());
  Seed m = initial_seed(from_arrows(presets::markov()));
  CHECK(m.c == IntMatrix::identity(3));
  Seed one = initial_seed(ExchangeMatrix(IntMatrix(1, 1)));
  CHECK(one.c == IntMatrix{{1}});
  CHECK(one.g == IntMatrix{{1}});
}

TEST_CASE("mutate examples") {
  Seed s = mutate(initial_seed(from_arrows(presets::a2())), 1);
  CHECK(s.b.matrix() == IntMatrix{{0, -1}, {1, 0}});
  CHECK(s.c_vector(0) == IntVector{-1, 0});
  CHECK(s.c_vector(1) == IntVector{1, 1});
  CHECK(s.g_vector(0) == IntVector{-1, 1});
  CHECK(s.g_vector(1) == IntVector{0, 1});
  CHECK(s.word == std::vector<int>{1});

  Seed one = mutate(initial_seed(ExchangeMatrix(IntMatrix(1, 1))), 1);
  CHECK(one.b.matrix() == IntMatrix{{0}});
  CHECK(one.c == IntMatrix{{-1}});
  CHECK(one.g == IntMatrix{{-1}});
}

TEST_CASE("mutate rejects out-of-range vertices") {
  Seed s = initial_seed(from_arrows(presets::a3()));
  CHECK_THROWS_AS(mutate(s, 0), std::out_of_range);
  CHECK_THROWS_AS(mutate(s, 4), std::out_of_range);
}

TEST_CASE("sign coherence and g_from_c examples") {
  CHECK(is_sign_coherent(IntMatrix::identity(3)));
  CHECK(is_sign_coherent(IntMatrix{{-1, 1}, {0, 1}}));
  CHECK_FALSE(is_sign_coherent(IntMatrix{{1, 0}, {-1, 1}}));
  CHECK_FALSE(is_sign_coherent(IntMatrix{{0, 1}, {0, 1}}));
  CHECK(g_from_c(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(g_from_c(IntMatrix{{-1, 1}, {0, 1}}) == IntMatrix{{-1, 0}, {1, 1}});
  CHECK(g_from_c(IntMatrix{{-1, 0}, {0, -1}}) == IntMatrix{{-1, 0}, {0, -1}});
  CHECK_THROWS_AS(g_from_c(IntMatrix{{2, 0}, {0, 1}}), NonUnimodular);
}

TEST_CASE("check_seed_invariants names the word of a corrupted seed") {
  Seed s = mutate(initial_seed(from_arrows(presets::a2())), 1);
  s.c(0, 0) = 1;
  try {
    check_seed_invariants(s);
    FAIL("corruption not detected");
  } catch (const InvariantViolation& e) {
    CHECK(e.word() == std::vector<int>{1});
  }
}

TEST_CASE("random walks agree with the FZ oracle and keep every invariant") {
  std::mt19937_64 rng(2024);
  for (int walk = 0; walk < 400; ++walk) {
    std::size_t n = 1 + walk % 4;
    ExchangeMatrix b0 = random_quiver(rng, n, 2);
    Seed s = initial_seed(b0);
    IntMatrix ob = b0.matrix(), oc = IntMatrix::identity(n);
    std::uniform_int_distribution<int> vertex(1, static_cast<int>(n));
    for (int step = 0; step < 8; ++step) {
      int k = vertex(rng);
      Seed next = mutate(s, k);
      fz_mutate(ob, oc, static_cast<std::size_t>(k - 1));
      REQUIRE(next.b.matrix() == ob);
      REQUIRE(next.c == oc);
      // Involution.
      Seed back = mutate(next, k);
      CHECK(back.b == s.b);
      CHECK(back.c == s.c);
      CHECK(back.g == s.g);
      // Tropical duality G B = B0 C.
      CHECK(next.g * next.b.matrix() == b0.matrix() * next.c);
      CHECK(next.g.transposed() * next.c == IntMatrix::identity(n));
      s = next;
    }
  }
}

TEST_CASE("mutation overflow carries the offending word") {
  // Repeated mutation on a large rank-2 quiver grows entries geometrically.
  ExchangeMatrix b(IntMatrix{{0, 1000}, {-1000, 0}});
  Seed s = initial_seed(b);
  bool thrown = false;
  try {
    for (int step = 0; step < 40; ++step) s = mutate(s, step % 2 + 1);
  } catch (const OverflowError& e) {
    thrown = true;
    CHECK(e.word().size() == s.word.size() + 1);
  }
  CHECK(thrown);
}
