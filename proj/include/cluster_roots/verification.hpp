#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluster_roots/int_vector.hpp"
#include "cluster_roots/mutation_search.hpp"
#include "cluster_roots/quiver.hpp"
#include "cluster_roots/schur_oracle.hpp"

namespace cluster_roots {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);
/// 0 pass, 1 fail, 2 inconclusive.
int exit_status(Verdict v);

/// A positive c-vector that did not certify as a real Schur root.
struct CVectorViolation {
  IntVector vector;
  /// "not_real_root", "refuted_not_real_root" or "likely_not_schur".
  std::string reason;
  int depth = 0;

  friend bool operator==(const CVectorViolation&, const CVectorViolation&) = default;
};

/// A certified real Schur root that was not reached as a c-vector.
struct SchurMiss {
  IntVector vector;
  int searched_depth = 0;

  friend bool operator==(const SchurMiss&, const SchurMiss&) = default;
};

struct TheoremReport {
  std::string quiver_id;
  int depth = 0;
  std::int64_t height = 0;
  int extended_depth = 0;  // depth of the extension walk, 0 if none was needed
  bool closed = false;
  StopReason search_stop = StopReason::none;
  std::size_t seeds_visited = 0;
  std::size_t c_side_count = 0;      // positive c-vectors within depth
  std::size_t schur_side_count = 0;  // certified real Schur roots within height
  std::vector<CVectorViolation> c_not_schur;
  std::vector<SchurMiss> schur_not_c;
  /// Real roots within height whose samples never certified (audit only).
  std::vector<IntVector> schur_audit;
  Verdict verdict = Verdict::inconclusive;
};

/// Two-sided bounded check that positive c-vectors and real Schur roots coincide.
/// Throws InvalidQuiver for non-acyclic b.
TheoremReport verify_main_theorem(const ExchangeMatrix& b, int depth, std::int64_t height,
                                  const OracleParams& params, std::string quiver_id = "");

struct AbsenceReport {
  IntVector vector;
  int depth = 0;
  bool absent = false;
  bool sign_coherent = true;
  bool complete = true;  // walk not cut short by overflow or the seed cap
  std::size_t seeds_visited = 0;
  std::string detail;

  bool holds() const { return absent && sign_coherent && complete; }
};

/// Bounded-depth evidence that neither v nor -v is a c-vector of b.
AbsenceReport verify_absence(const ExchangeMatrix& b, const IntVector& v, int depth,
                             const SearchOptions& options = {});

/// (4,4,4) is not a c-vector of the Markov quiver, up to depth.
bool verify_counterexample_markov(int depth);
/// (1,2,1) is not a c-vector of the non-acyclic affine A2 quiver, up to depth.
bool verify_counterexample_atilde2(int depth);

}  // namespace cluster_roots
