#include "cluster_roots/verification.hpp"

#include <algorithm>

#include "cluster_roots/errors.hpp"
#include "cluster_roots/presets.hpp"
#include "cluster_roots/root_system.hpp"

namespace cluster_roots {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_status(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 1;
}

TheoremReport verify_main_theorem(const ExchangeMatrix& b, int depth, std::int64_t height, const OracleParams& params,
                                  std::string quiver_id) {
  const QuiverForms forms = forms_of(b);
  TheoremReport report;
  report.quiver_id = std::move(quiver_id);
  report.depth = depth;
  report.height = height;

  // Inclusion one: every positive c-vector is a real Schur root.
  const SearchReport search = enumerate_c_vectors(b, depth);
  report.closed = search.closed;
  report.search_stop = search.stop;
  report.seeds_visited = search.seeds_visited;
  report.c_side_count = search.positive_c_vectors.size();
  for (const auto& [v, first_depth] : search.positive_c_vectors) {
    if (!is_positive_real_root(forms, v)) {
      report.c_not_schur.push_back({v, "not_real_root", first_depth});
      continue;
    }
    const SchurVerdict verdict = is_real_schur_root(b, v, params);
    if (verdict.kind != SchurKind::certified)
      report.c_not_schur.push_back({v, std::string(to_string(verdict.kind)), first_depth});
  }

  // Inclusion two: every certified real Schur root within height is a c-vector.
  const SchurRootSet schur = enumerate_real_schur_roots(b, height, params);
  report.schur_side_count = schur.certified.size();
  report.schur_audit.assign(schur.likely_not_schur.begin(), schur.likely_not_schur.end());

  std::set<IntVector> missing;
  for (const auto& d : schur.certified)
    if (!search.positive_c_vectors.count(d)) missing.insert(d);

  int searched = depth;
  if (!missing.empty() && !search.closed) {
    // One doubling of the depth, then whatever is left is reported.
    searched = std::max(1, 2 * depth);
    report.extended_depth = searched;
    const MembershipResult ext = find_c_vectors(b, missing, searched);
    for (const auto& [v, d] : ext.found) missing.erase(v);
  }
  for (const auto& d : missing) report.schur_not_c.push_back({d, searched});

  if (!report.c_not_schur.empty())
    report.verdict = Verdict::fail;
  else if (!report.schur_not_c.empty())
    report.verdict = search.closed ? Verdict::fail : Verdict::inconclusive;
  else
    report.verdict = Verdict::pass;
  return report;
}

AbsenceReport verify_absence(const ExchangeMatrix& b, const IntVector& v, int depth, const SearchOptions& options) {
  AbsenceReport report;
  report.vector = v;
  report.depth = depth;
  try {
    const MembershipResult r = find_c_vectors(b, {v}, depth, options);
    report.absent = r.found.empty();
    report.complete = r.complete();
    report.seeds_visited = r.search.seeds_visited;
    if (!report.complete) report.detail = r.search.stop_detail;
    if (!report.absent)
      report.detail = "found at depth " + std::to_string(r.found.begin()->second);
  } catch (const InvariantViolation& e) {
    report.sign_coherent = false;
    report.complete = false;
    report.detail = e.what();
  }
  return report;
}

bool verify_counterexample_markov(int depth) {
  return verify_absence(from_arrows(presets::markov()), IntVector{4, 4, 4}, depth).holds();
}

bool verify_counterexample_atilde2(int depth) {
  return verify_absence(from_arrows(presets::atilde2()), IntVector{1, 2, 1}, depth).holds();
}

}  // namespace cluster_roots
