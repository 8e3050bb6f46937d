#pragma once

#include <chrono>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluster_roots/json_io.hpp"
#include "cluster_roots/quiver.hpp"
#include "cluster_roots/schur_oracle.hpp"

namespace cluster_roots {

struct ServiceConfig {
  std::chrono::seconds idle_timeout{1800};
  int max_enumerate_depth = 10;
  std::size_t max_seeds = 200'000;
  bool transpose_convention = false;
  OracleParams oracle;
};

/// Error carrying the HTTP status the transport should answer with.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

/// Mutation sessions addressed by opaque id.  Request and response bodies are the
/// same JSON documents the CLI reads and writes.  Sessions are independent; calls
/// on one session are serialized by its own lock.
class SessionService {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionService(ServiceConfig config = {});

  /// Body: a quiver document.  Returns {"id", "state"}.
  Json create(const Json& body);
  /// Body: {"k": vertex}.  Returns the new state.
  Json mutate(const std::string& id, const Json& body);
  Json undo(const std::string& id);
  Json state(const std::string& id);
  /// Body: {"depth": D}.  Returns a SearchReport document.
  Json enumerate(const std::string& id, const Json& body);

  std::size_t session_count();
  /// Drops sessions idle for longer than the configured timeout.
  void expire_idle(Clock::time_point now = Clock::now());

  const ServiceConfig& config() const { return config_; }

 private:
  struct Session {
    explicit Session(const ExchangeMatrix& b) : initial(b), seed(initial_seed(b)), acyclic(is_acyclic(b)) {}

    std::mutex lock;
    std::string id;
    ExchangeMatrix initial;
    Seed seed;
    std::vector<Seed> history;
    bool acyclic = false;
    std::map<IntVector, SchurKind> schur_cache;
    Clock::time_point last_used;
  };

  std::shared_ptr<Session> find(const std::string& id);
  Json state_of(Session& s);
  std::string next_id();

  ServiceConfig config_;
  std::mutex sessions_lock_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t id_salt_;
};

/// Serves the session API over HTTP until the server is stopped.
///   POST /api/sessions                 create
///   GET  /api/sessions/{id}            state
///   POST /api/sessions/{id}/mutate     mutate
///   POST /api/sessions/{id}/undo       undo
///   POST /api/sessions/{id}/enumerate  enumerate
/// Static assets from `static_dir` are mounted at / when non-empty.  Port 0 binds
/// any free port.  `on_ready` receives the bound port and a callback that stops
/// the server.
int serve(SessionService& service, const std::string& host, int port, const std::string& static_dir,
          std::function<void(int, std::function<void()>)> on_ready = {});

}  // namespace cluster_roots
