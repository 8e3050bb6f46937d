#include "cluster_roots/schur_oracle.hpp"

#include <stdexcept>

#include "cluster_roots/errors.hpp"
#include "cluster_roots/root_system.hpp"

namespace cluster_roots {

std::string_view to_string(SchurKind kind) {
  switch (kind) {
    case SchurKind::certified: return "certified";
    case SchurKind::refuted_not_real_root: return "refuted_not_real_root";
    case SchurKind::likely_not_schur: return "likely_not_schur";
  }
  return "?";
}

std::uint64_t trial_seed(std::uint64_t base, std::uint32_t trial) {
  // splitmix64 finalizer over base + (trial + 1) * golden ratio
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SchurVerdict is_real_schur_root(const ExchangeMatrix& b, const IntVector& d, const OracleParams& params) {
  const QuiverForms forms = forms_of(b);
  if (d.size() != b.size()) throw std::invalid_argument("dimension vector length does not match the quiver");
  if (!d.is_nonnegative() || d.is_zero()) throw std::invalid_argument("dimension vector must be nonnegative and nonzero");
  PrimeField{params.prime};  // validates p before any work

  SchurVerdict verdict;
  if (q(forms, d) != 1) {
    verdict.kind = SchurKind::refuted_not_real_root;
    return verdict;
  }
  const QuiverSpec quiver = to_arrows(b);
  for (std::uint32_t t = 0; t < params.trials; ++t) {
    RepSample sample = sample_generic_rep(quiver, d, params.prime, trial_seed(params.rng_seed, t));
    verdict.trials = t + 1;
    if (!has_scalar_endomorphisms(sample.to_representation())) continue;

    // Regenerate from the recorded seed and solve again before accepting.
    const RepSample again = sample_generic_rep(quiver, d, params.prime, sample.rng_seed);
    if (again.matrices != sample.matrices || end_dim(again) != 1)
      throw InvariantViolation("Schur certificate for " + to_string(d) + " did not reproduce");
    verdict.kind = SchurKind::certified;
    verdict.witness = std::move(sample);
    return verdict;
  }
  verdict.kind = SchurKind::likely_not_schur;
  return verdict;
}

SchurRootSet enumerate_real_schur_roots(const ExchangeMatrix& b, std::int64_t height, const OracleParams& params) {
  const QuiverForms forms = forms_of(b);
  SchurRootSet out;
  for (const auto& d : enumerate_positive_real_roots(forms, height)) {
    const SchurVerdict v = is_real_schur_root(b, d, params);
    if (v.kind == SchurKind::certified)
      out.certified.insert(d);
    else
      out.likely_not_schur.insert(d);
  }
  return out;
}

}  // namespace cluster_roots
