#include <algorithm>

#include "doctest.h"

#include "cluster_roots/errors.hpp"
#include "cluster_roots/presets.hpp"
#include "cluster_roots/verification.hpp"

using namespace cluster_roots;

namespace {

ExchangeMatrix quiver(const QuiverSpec& spec) { return from_arrows(spec); }

}  // namespace

TEST_CASE("verdict exit codes") {
  CHECK(exit_status(Verdict::pass) == 0);
  CHECK(exit_status(Verdict::fail) == 1);
  CHECK(exit_status(Verdict::inconclusive) == 2);
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("A2 passes closed") {
  TheoremReport r = verify_main_theorem(quiver(presets::a2()), 5, 10, {}, "a2");
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.closed);
  CHECK(r.c_side_count == 3);
  CHECK(r.schur_side_count == 3);
  CHECK(r.c_not_schur.empty());
  CHECK(r.schur_not_c.empty());
  CHECK(r.quiver_id == "a2");
}

TEST_CASE("A3 passes with six vectors on each side") {
  TheoremReport r = verify_main_theorem(quiver(presets::a3()), 8, 10, {});
  CHECK(r.verdict == Verdict::pass);
  // The labelled A3 walk needs depth 9 to close.
  CHECK_FALSE(r.closed);
  CHECK(verify_main_theorem(quiver(presets::a3()), 9, 10, {}).closed);
  CHECK(r.c_side_count == 6);
  CHECK(r.schur_side_count == 6);
}

TEST_CASE("Kronecker passes within bounds") {
  TheoremReport r = verify_main_theorem(quiver(presets::kronecker()), 8, 8, {});
  CHECK(r.verdict == Verdict::pass);
  CHECK_FALSE(r.closed);
  CHECK(r.c_side_count == 15);
  CHECK(r.schur_side_count == 8);
  CHECK(r.schur_audit.empty());
}

TEST_CASE("depth auto-extension resolves shallow misses") {
  // (2,3) first appears at depth 5; height 5 asks for it.
  TheoremReport r = verify_main_theorem(quiver(presets::kronecker()), 3, 5, {});
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.extended_depth == 6);
  // Too shallow even after one doubling: inconclusive, not fail.
  TheoremReport s = verify_main_theorem(quiver(presets::kronecker()), 1, 9, {});
  CHECK(s.verdict == Verdict::inconclusive);
  REQUIRE_FALSE(s.schur_not_c.empty());
  CHECK(s.schur_not_c.front().searched_depth == 2);
  CHECK(s.c_not_schur.empty());
}

TEST_CASE("a weak oracle is surfaced as a failure of inclusion (i)") {
  // One trial over F_2 often misses certificates; any miss must fail loudly.
  bool saw_fail = false;
  for (std::uint64_t seed = 1; seed <= 20 && !saw_fail; ++seed) {
    TheoremReport r = verify_main_theorem(quiver(presets::wild112()), 3, 4, {1, 2, seed});
    if (!r.c_not_schur.empty()) {
      saw_fail = true;
      CHECK(r.verdict == Verdict::fail);
      CHECK(r.c_not_schur.front().reason == "likely_not_schur");
    }
  }
  CHECK(saw_fail);
}

TEST_CASE("wild sample passes at small bounds with audited non-Schur roots") {
  TheoremReport r = verify_main_theorem(quiver(presets::wild112()), 5, 8, {});
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.c_not_schur.empty());
  CHECK(r.schur_not_c.empty());
  // (1,3,2) and (2,3,1) are real roots but not Schur.
  CHECK(std::find(r.schur_audit.begin(), r.schur_audit.end(), IntVector{1, 3, 2}) != r.schur_audit.end());
}

TEST_CASE("non-acyclic input is rejected") {
  CHECK_THROWS_AS(verify_main_theorem(quiver(presets::atilde2()), 4, 4, {}), InvalidQuiver);
}

TEST_CASE("pass is monotone in depth for closed searches") {
  for (int depth = 9; depth <= 14; ++depth) {
    TheoremReport r = verify_main_theorem(quiver(presets::a3()), depth, 10, {});
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.closed);
  }
}

TEST_CASE("counterexamples") {
  CHECK(verify_counterexample_markov(0));
  CHECK(verify_counterexample_markov(6));
  CHECK(verify_counterexample_atilde2(0));
  CHECK(verify_counterexample_atilde2(6));
  AbsenceReport present = verify_absence(quiver(presets::markov()), {1, 0, 0}, 0);
  CHECK_FALSE(present.absent);
  CHECK_FALSE(present.holds());
  AbsenceReport p2 = verify_absence(quiver(presets::atilde2()), {0, 1, 0}, 0);
  CHECK_FALSE(p2.absent);
  AbsenceReport m = verify_absence(quiver(presets::markov()), {4, 4, 4}, 6);
  CHECK(m.holds());
  CHECK(m.sign_coherent);
  CHECK(m.complete);
  SearchOptions tiny;
  tiny.max_seeds = 5;
  AbsenceReport cut = verify_absence(quiver(presets::markov()), {4, 4, 4}, 6, tiny);
  CHECK_FALSE(cut.complete);
  CHECK_FALSE(cut.holds());
}
