#include "cluster_roots/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cluster_roots/errors.hpp"
#include "cluster_roots/json_io.hpp"
#include "cluster_roots/mutation_search.hpp"
#include "cluster_roots/presets.hpp"
#include "cluster_roots/root_system.hpp"
#include "cluster_roots/schur_oracle.hpp"
#include "cluster_roots/service.hpp"
#include "cluster_roots/verification.hpp"

namespace cluster_roots {

namespace {

constexpr int kInputError = 3;
constexpr int kInvariantError = 4;

struct Globals {
  std::string convention = "standard";
  std::string output = "text";
  bool machine() const { return output == "machine"; }
};

// Preset name, inline JSON document, or path to a JSON document.
ExchangeMatrix load_quiver(const std::string& arg, const Globals& g) {
  ExchangeMatrix b = [&] {
    if (auto spec = presets::by_name(arg)) return from_arrows(*spec);
    if (!arg.empty() && arg.front() == '{') return parse_quiver_text(arg);
    std::ifstream in(arg);
    if (!in) throw InvalidQuiver("cannot read quiver \"" + arg + "\": not a preset, inline document or readable file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_quiver_text(ss.str());
  }();
  return g.convention == "transpose" ? b.transposed() : b;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  for (auto x : parse_int_list(text)) word.push_back(static_cast<int>(x));
  return word;
}

void print_vectors(std::ostream& out, const std::string& label, const std::set<IntVector>& vs) {
  out << label << " (" << vs.size() << "):";
  for (const auto& v : vs) out << ' ' << v;
  out << '\n';
}

void print_seed(std::ostream& out, const Seed& s) {
  out << "word = " << format_word(s.word) << '\n';
  out << "B = " << s.b.matrix() << '\n';
  out << "C = " << s.c << '\n';
  out << "G = " << s.g << '\n';
}

void print_report(std::ostream& out, const SearchReport& r) {
  print_vectors(out, "positive c-vectors", r.positive_set());
  out << "negative c-vectors (distinct): " << r.negative_count << '\n';
  out << "seeds visited: " << r.seeds_visited << '\n';
  out << "depth reached: " << r.depth_reached << '\n';
  out << "closed: " << (r.closed ? "yes" : "no") << '\n';
  if (r.stop != StopReason::none) out << "stopped: " << to_string(r.stop) << ' ' << r.stop_detail << '\n';
}

void print_theorem(std::ostream& out, const TheoremReport& r) {
  out << "quiver: " << r.quiver_id << '\n';
  out << "depth " << r.depth << ", height " << r.height;
  if (r.extended_depth) out << ", extended to depth " << r.extended_depth;
  out << '\n';
  out << "mutation search: " << r.seeds_visited << " seeds, " << (r.closed ? "closed" : "open");
  if (r.search_stop != StopReason::none) out << " (stopped: " << to_string(r.search_stop) << ')';
  out << '\n';
  out << "positive c-vectors: " << r.c_side_count << ", certified real Schur roots: " << r.schur_side_count << '\n';
  out << "c-vectors failing the Schur oracle: " << r.c_not_schur.size() << '\n';
  for (const auto& v : r.c_not_schur) out << "  " << v.vector << ' ' << v.reason << " (depth " << v.depth << ")\n";
  out << "real Schur roots not reached as c-vectors: " << r.schur_not_c.size() << '\n';
  for (const auto& m : r.schur_not_c) out << "  " << m.vector << " (searched to depth " << m.searched_depth << ")\n";
  if (!r.schur_audit.empty()) {
    out << "real roots without a Schur certificate (audit, not certified):";
    for (const auto& v : r.schur_audit) out << ' ' << v;
    out << '\n';
  }
  out << "verdict: " << to_string(r.verdict) << '\n';
}

void print_absence(std::ostream& out, const std::string& name, const AbsenceReport& r) {
  out << name << ": " << r.vector << (r.absent ? " absent" : " FOUND") << " within depth " << r.depth << " ("
      << r.seeds_visited << " seeds, " << (r.sign_coherent ? "all sign-coherent" : "invariant failure")
      << (r.complete ? "" : ", incomplete") << ")\n";
  if (!r.detail.empty()) out << "  " << r.detail << '\n';
  out << "  bounded-depth evidence, not a proof of absence\n";
  out << "holds: " << (r.holds() ? "yes" : "no") << '\n';
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void add_oracle_options(CLI::App* cmd, OracleParams& p) {
  cmd->add_option("--trials", p.trials, "samples per dimension vector")->envname("CLUSTER_ROOTS_TRIALS");
  cmd->add_option("--prime", p.prime, "field characteristic")->envname("CLUSTER_ROOTS_PRIME");
  cmd->add_option("--seed", p.rng_seed, "sampling seed")->envname("CLUSTER_ROOTS_SEED");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"c-vectors, g-vectors and real Schur roots of quivers"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--convention", g.convention, "exchange-matrix convention")
      ->check(CLI::IsMember({"standard", "transpose"}))
      ->envname("CLUSTER_ROOTS_CONVENTION");
  app.add_option("--output", g.output, "output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->envname("CLUSTER_ROOTS_OUTPUT");

  std::string quiver, word, vector_text, example;
  int depth = -1;
  std::int64_t height = 10;
  std::size_t max_seeds = SearchOptions{}.max_seeds;
  std::size_t cap = 10000;
  std::string trace_path;
  OracleParams oracle;

  auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation word and print B, C, G");
  mutate_cmd->add_option("quiver", quiver, "preset, inline document or file")->required();
  mutate_cmd->add_option("word", word, "1-based vertices, e.g. 1,2,1")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "collect c-vectors by breadth-first mutation");
  enum_cmd->add_option("quiver", quiver)->required();
  enum_cmd->add_option("--depth", depth, "mutation depth (default by rank)")->check(CLI::NonNegativeNumber)->envname("CLUSTER_ROOTS_DEPTH");
  enum_cmd->add_option("--max-seeds", max_seeds, "visited-seed cap")->envname("CLUSTER_ROOTS_MAX_SEEDS");
  enum_cmd->add_option("--trace", trace_path, "append visited seeds to this file, one per line");

  auto* roots_cmd = app.add_subcommand("roots", "positive real roots up to a height");
  roots_cmd->add_option("quiver", quiver)->required();
  roots_cmd->add_option("--height", height)->envname("CLUSTER_ROOTS_HEIGHT");

  auto* schur_cmd = app.add_subcommand("schur", "test a dimension vector for being a real Schur root");
  schur_cmd->add_option("quiver", quiver)->required();
  schur_cmd->add_option("vector", vector_text, "e.g. 2,1")->required();
  add_oracle_options(schur_cmd, oracle);

  auto* verify_cmd = app.add_subcommand("verify", "bounded check: positive c-vectors = real Schur roots");
  verify_cmd->add_option("quiver", quiver)->required();
  verify_cmd->add_option("--depth", depth)->check(CLI::NonNegativeNumber)->envname("CLUSTER_ROOTS_DEPTH");
  verify_cmd->add_option("--height", height)->envname("CLUSTER_ROOTS_HEIGHT");
  add_oracle_options(verify_cmd, oracle);

  auto* examples_cmd = app.add_subcommand("examples", "absence checks for the non-acyclic examples");
  examples_cmd->add_option("name", example)->required()->check(CLI::IsMember({"markov", "atilde2"}));
  examples_cmd->add_option("--depth", depth)->check(CLI::NonNegativeNumber)->envname("CLUSTER_ROOTS_DEPTH");

  auto* finite_cmd = app.add_subcommand("finite", "decide finite type by closing the mutation walk");
  finite_cmd->add_option("quiver", quiver)->required();
  finite_cmd->add_option("--cap", cap, "seed cap")->envname("CLUSTER_ROOTS_CAP");

  ServiceConfig service_config;
  std::string host = "127.0.0.1", static_dir;
  int port = 8080;
  long idle_seconds = service_config.idle_timeout.count();
  auto* serve_cmd = app.add_subcommand("serve", "run the session service");
  serve_cmd->add_option("--port", port)->envname("CLUSTER_ROOTS_PORT");
  serve_cmd->add_option("--host", host)->envname("CLUSTER_ROOTS_HOST");
  serve_cmd->add_option("--static-dir", static_dir, "serve explorer assets from here")->envname("CLUSTER_ROOTS_STATIC_DIR");
  serve_cmd->add_option("--idle-timeout", idle_seconds, "seconds")->envname("CLUSTER_ROOTS_IDLE_TIMEOUT");
  serve_cmd->add_option("--max-depth", service_config.max_enumerate_depth, "enumerate depth cap")
      ->envname("CLUSTER_ROOTS_MAX_DEPTH");
  serve_cmd->add_option("--max-seeds", service_config.max_seeds)->envname("CLUSTER_ROOTS_MAX_SEEDS");
  add_oracle_options(serve_cmd, service_config.oracle);

  std::vector<const char*> argv;
  argv.push_back("cluster-roots");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (mutate_cmd->parsed()) {
      const Seed s = mutate_word(initial_seed(load_quiver(quiver, g)), parse_word(word));
      if (g.machine())
        emit(out, seed_to_json(s));
      else
        print_seed(out, s);
      return 0;
    }
    if (enum_cmd->parsed()) {
      const ExchangeMatrix b = load_quiver(quiver, g);
      SearchOptions options;
      options.max_seeds = max_seeds;
      std::ofstream trace;
      if (!trace_path.empty()) {
        trace.open(trace_path, std::ios::app);
        if (!trace) throw std::invalid_argument("cannot open trace file " + trace_path);
        options.trace = &trace;
      }
      const SearchReport r = enumerate_c_vectors(b, depth < 0 ? default_depth(b.size()) : depth, options);
      if (g.machine())
        emit(out, to_json(r));
      else
        print_report(out, r);
      return 0;
    }
    if (roots_cmd->parsed()) {
      const auto roots = enumerate_positive_real_roots(forms_of(load_quiver(quiver, g)), height);
      if (g.machine()) {
        Json j;
        j["height"] = height;
        j["count"] = roots.size();
        Json list = Json::array();
        for (const auto& v : roots) list.push_back(to_json(v));
        j["roots"] = std::move(list);
        emit(out, j);
      } else {
        print_vectors(out, "positive real roots of height <= " + std::to_string(height), roots);
      }
      return 0;
    }
    if (schur_cmd->parsed()) {
      const ExchangeMatrix b = load_quiver(quiver, g);
      const IntVector d(parse_int_list(vector_text));
      const SchurVerdict v = is_real_schur_root(b, d, oracle);
      if (g.machine()) {
        emit(out, to_json(v, d));
      } else {
        out << d << ": " << to_string(v.kind) << " after " << v.trials << " sample(s)";
        if (v.witness) out << " (witness p = " << v.witness->p << ", seed = " << v.witness->rng_seed << ")";
        if (v.kind == SchurKind::likely_not_schur) out << " [not certified]";
        out << '\n';
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      const ExchangeMatrix b = load_quiver(quiver, g);
      if (!is_acyclic(b)) throw InvalidQuiver("verify needs an acyclic quiver; \"" + quiver + "\" has an oriented cycle");
      const TheoremReport r = verify_main_theorem(b, depth < 0 ? default_depth(b.size()) : depth, height, oracle, quiver);
      if (g.machine())
        emit(out, to_json(r));
      else
        print_theorem(out, r);
      return exit_status(r.verdict);
    }
    if (examples_cmd->parsed()) {
      const bool markov = example == "markov";
      ExchangeMatrix b = from_arrows(markov ? presets::markov() : presets::atilde2());
      if (g.convention == "transpose") b = b.transposed();
      const IntVector v = markov ? IntVector{4, 4, 4} : IntVector{1, 2, 1};
      const AbsenceReport r = verify_absence(b, v, depth < 0 ? 10 : depth);
      if (g.machine()) {
        Json j;
        j["example"] = example;
        const Json body = to_json(r);
        for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
        emit(out, j);
      } else {
        print_absence(out, example, r);
      }
      return r.holds() ? 0 : 1;
    }
    if (finite_cmd->parsed()) {
      const TypeVerdict v = is_finite_type(load_quiver(quiver, g), cap);
      if (g.machine())
        emit(out, Json{{"cap", cap}, {"type", std::string(to_string(v))}});
      else
        out << to_string(v) << " (cap " << cap << " seeds)\n";
      return 0;
    }
    if (serve_cmd->parsed()) {
      service_config.idle_timeout = std::chrono::seconds(idle_seconds);
      service_config.transpose_convention = g.convention == "transpose";
      PrimeField{service_config.oracle.prime};
      SessionService service(service_config);
      return serve(service, host, port, static_dir);
    }
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantError;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cluster_roots
