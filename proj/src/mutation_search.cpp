#include "cluster_roots/mutation_search.hpp"

#include <climits>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "cluster_roots/errors.hpp"

namespace cluster_roots {

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::none: return "none";
    case StopReason::overflow: return "overflow";
    case StopReason::seed_cap: return "seed_cap";
    case StopReason::target_hit: return "target_hit";
  }
  return "?";
}

std::string_view to_string(TypeVerdict v) { return v == TypeVerdict::finite ? "finite" : "inconclusive"; }

std::set<IntVector> SearchReport::positive_set() const {
  std::set<IntVector> out;
  for (const auto& [v, depth] : positive_c_vectors) out.insert(v);
  return out;
}

int default_depth(std::size_t n) { return n <= 3 ? 8 : n == 4 ? 6 : 5; }

namespace {

struct SeedKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : k) h = (h ^ static_cast<std::uint64_t>(x)) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::int64_t> seed_key(const Seed& s) {
  std::vector<std::int64_t> key(s.b.matrix().data());
  key.insert(key.end(), s.c.data().begin(), s.c.data().end());
  return key;
}

void write_trace(std::ostream& out, const Seed& s) {
  nlohmann::ordered_json j;
  j["word"] = s.word;
  j["b"] = s.b.matrix().to_rows();
  j["c"] = s.c.to_rows();
  out << j.dump() << '\n';
}

struct Node {
  Seed seed;
  int last;  // 1-based vertex of the mutation that produced it, 0 for the root
};

// Visitor returns true to stop the walk early.
using Visitor = std::function<bool(const Seed&, int depth)>;

SearchReport walk(const ExchangeMatrix& b, int depth, const SearchOptions& options, const Visitor& visit) {
  SearchReport report;
  const int n = static_cast<int>(b.size());
  std::unordered_set<std::vector<std::int64_t>, SeedKeyHash> visited;

  auto accept = [&](const Seed& s, int d) {
    visited.insert(seed_key(s));
    ++report.seeds_visited;
    if (options.trace) write_trace(*options.trace, s);
    return visit(s, d);
  };

  std::vector<Node> frontier;
  frontier.push_back({initial_seed(b), 0});
  check_seed_invariants(frontier.front().seed);
  if (accept(frontier.front().seed, 0)) {
    report.stop = StopReason::target_hit;
    return report;
  }

  for (int d = 1; d <= depth; ++d) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int k = 1; k <= n; ++k) {
        if (k == node.last) continue;
        std::optional<Seed> maybe;
        try {
          maybe = mutate(node.seed, k);
        } catch (const OverflowError& e) {
          report.stop = StopReason::overflow;
          report.stop_detail = e.what();
          return report;
        }
        Seed& child = *maybe;
        if (visited.count(seed_key(child))) continue;
        if (visited.size() >= options.max_seeds) {
          report.stop = StopReason::seed_cap;
          report.stop_detail = "visited-seed cap of " + std::to_string(options.max_seeds) + " reached at word " +
                               format_word(child.word);
          return report;
        }
        if (accept(child, d)) {
          report.depth_reached = d;
          report.stop = StopReason::target_hit;
          return report;
        }
        next.push_back({std::move(child), k});
      }
    }
    if (next.empty()) {
      report.closed = true;
      return report;
    }
    frontier = std::move(next);
    report.depth_reached = d;
  }

  // Closed iff nothing new lies one step past the final layer.
  for (const Node& node : frontier)
    for (int k = 1; k <= n; ++k) {
      if (k == node.last) continue;
      try {
        if (!visited.count(seed_key(mutate(node.seed, k)))) return report;
      } catch (const OverflowError&) {
        return report;
      }
    }
  report.closed = true;
  return report;
}

std::function<void(const Seed&, int)> collector(SearchReport& into, std::unordered_set<IntVector, IntVectorHash>& negatives) {
  return [&into, &negatives](const Seed& s, int d) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      IntVector v = s.c_vector(j);
      if (v.is_nonnegative())
        into.positive_c_vectors.emplace(std::move(v), d);
      else
        negatives.insert(std::move(v));
    }
  };
}

}  // namespace

SearchReport enumerate_c_vectors(const ExchangeMatrix& b, int depth, const SearchOptions& options) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  SearchReport collected;
  std::unordered_set<IntVector, IntVectorHash> negatives;
  auto collect = collector(collected, negatives);
  SearchReport report = walk(b, depth, options, [&](const Seed& s, int d) {
    collect(s, d);
    return false;
  });
  report.positive_c_vectors = std::move(collected.positive_c_vectors);
  report.negative_count = negatives.size();
  return report;
}

MembershipResult find_c_vectors(const ExchangeMatrix& b, const std::set<IntVector>& targets, int depth,
                                const SearchOptions& options) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  for (const auto& t : targets) {
    if (t.size() != b.size()) throw std::invalid_argument("target " + to_string(t) + " has the wrong length");
    if (t.is_zero()) throw std::invalid_argument("zero vector is never a c-vector column");
  }
  MembershipResult result;
  std::set<IntVector> remaining = targets;
  SearchReport collected;
  std::unordered_set<IntVector, IntVectorHash> negatives;
  auto collect = collector(collected, negatives);
  result.search = walk(b, depth, options, [&](const Seed& s, int d) {
    collect(s, d);
    for (std::size_t j = 0; j < s.size() && !remaining.empty(); ++j) {
      IntVector v = s.c_vector(j);
      for (const IntVector& cand : {v, v.negated()}) {
        if (remaining.erase(cand)) result.found.emplace(cand, d);
      }
    }
    return remaining.empty();
  });
  result.search.positive_c_vectors = std::move(collected.positive_c_vectors);
  result.search.negative_count = negatives.size();
  return result;
}

bool contains_c_vector(const ExchangeMatrix& b, const IntVector& v, int depth, const SearchOptions& options) {
  const MembershipResult r = find_c_vectors(b, {v}, depth, options);
  if (!r.found.empty()) return true;
  if (!r.complete())
    throw OverflowError("search for " + to_string(v) + " stopped early (" + std::string(to_string(r.search.stop)) +
                        "): " + r.search.stop_detail);
  return false;
}

TypeVerdict is_finite_type(const ExchangeMatrix& b, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  SearchOptions options;
  options.max_seeds = cap;
  const SearchReport r = walk(b, INT_MAX, options, [](const Seed&, int) { return false; });
  return r.closed ? TypeVerdict::finite : TypeVerdict::inconclusive;
}

std::vector<Seed> read_trace(std::istream& in) {
  std::vector<Seed> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    Seed s{ExchangeMatrix(IntMatrix::from_rows(j.at("b").get<std::vector<std::vector<std::int64_t>>>())),
           IntMatrix::from_rows(j.at("c").get<std::vector<std::vector<std::int64_t>>>()), IntMatrix(),
           j.at("word").get<std::vector<int>>()};
    s.g = g_from_c(s.c);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cluster_roots
