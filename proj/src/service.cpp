#include "cluster_roots/service.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include <httplib.h>

#include "cluster_roots/errors.hpp"
#include "cluster_roots/mutation_search.hpp"

namespace cluster_roots {

namespace {

std::string_view column_status(SchurKind k) {
  switch (k) {
    case SchurKind::certified: return "certified";
    case SchurKind::refuted_not_real_root: return "refuted";
    case SchurKind::likely_not_schur: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

SessionService::SessionService(ServiceConfig config) : config_(std::move(config)), id_salt_(std::random_device{}()) {
  id_salt_ = (id_salt_ << 32) ^ std::random_device{}();
}

std::string SessionService::next_id() {
  // Caller holds sessions_lock_.
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << (trial_seed(id_salt_, static_cast<std::uint32_t>(++counter_)));
  return os.str();
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) {
  expire_idle();
  std::lock_guard guard(sessions_lock_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "unknown session " + id);
  return it->second;
}

void SessionService::expire_idle(Clock::time_point now) {
  std::lock_guard guard(sessions_lock_);
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock session_guard(it->second->lock, std::try_to_lock);
    // A session busy with a request is in use, not idle.
    if (session_guard.owns_lock() && now - it->second->last_used > config_.idle_timeout)
      it = sessions_.erase(it);
    else
      ++it;
  }
}

std::size_t SessionService::session_count() {
  std::lock_guard guard(sessions_lock_);
  return sessions_.size();
}

Json SessionService::state_of(Session& s) {
  Json j;
  j["id"] = s.id;
  j["n"] = s.seed.size();
  j["acyclic_initial"] = s.acyclic;
  const Json seed = seed_to_json(s.seed);
  for (auto it = seed.begin(); it != seed.end(); ++it) j[it.key()] = it.value();

  Json columns = Json::array();
  for (std::size_t k = 0; k < s.seed.size(); ++k) {
    const IntVector v = s.seed.c_vector(k);
    const bool negative = v.is_nonpositive();
    Json col;
    col["column"] = k + 1;
    col["vector"] = to_json(v);
    col["sign"] = negative ? "-" : "+";
    if (!s.acyclic) {
      col["schur"] = "not-computed";
    } else {
      const IntVector root = negative ? v.negated() : v;
      auto it = s.schur_cache.find(root);
      if (it == s.schur_cache.end())
        it = s.schur_cache.emplace(root, is_real_schur_root(s.initial, root, config_.oracle).kind).first;
      col["schur"] = std::string(column_status(it->second));
      if (negative) col["negative_of"] = to_json(root);
    }
    columns.push_back(std::move(col));
  }
  j["columns"] = std::move(columns);
  return j;
}

Json SessionService::create(const Json& body) {
  ExchangeMatrix b = [&] {
    try {
      return parse_quiver(body);
    } catch (const InvalidQuiver& e) {
      throw ServiceError(400, e.what());
    }
  }();
  if (config_.transpose_convention) b = b.transposed();

  auto s = std::make_shared<Session>(b);
  s->last_used = Clock::now();
  {
    std::lock_guard guard(sessions_lock_);
    s->id = next_id();
    sessions_.emplace(s->id, s);
  }
  std::lock_guard guard(s->lock);
  Json out;
  out["id"] = s->id;
  out["state"] = state_of(*s);
  return out;
}

Json SessionService::mutate(const std::string& id, const Json& body) {
  auto s = find(id);
  std::lock_guard guard(s->lock);
  s->last_used = Clock::now();
  if (!body.is_object() || !body.contains("k") || !body["k"].is_number_integer())
    throw ServiceError(400, "mutate body must be {\"k\": vertex}");
  const auto k = body["k"].get<std::int64_t>();
  if (k < 1 || static_cast<std::size_t>(k) > s->seed.size())
    throw ServiceError(400, "vertex " + std::to_string(k) + " outside 1.." + std::to_string(s->seed.size()));
  try {
    Seed next = cluster_roots::mutate(s->seed, static_cast<int>(k));
    s->history.push_back(std::move(s->seed));
    s->seed = std::move(next);
  } catch (const OverflowError& e) {
    throw ServiceError(422, e.what());
  }
  return state_of(*s);
}

Json SessionService::undo(const std::string& id) {
  auto s = find(id);
  std::lock_guard guard(s->lock);
  s->last_used = Clock::now();
  if (s->history.empty()) throw ServiceError(409, "nothing to undo");
  s->seed = std::move(s->history.back());
  s->history.pop_back();
  return state_of(*s);
}

Json SessionService::state(const std::string& id) {
  auto s = find(id);
  std::lock_guard guard(s->lock);
  s->last_used = Clock::now();
  return state_of(*s);
}

Json SessionService::enumerate(const std::string& id, const Json& body) {
  auto s = find(id);
  std::lock_guard guard(s->lock);
  s->last_used = Clock::now();
  if (!body.is_object() || !body.contains("depth") || !body["depth"].is_number_integer())
    throw ServiceError(400, "enumerate body must be {\"depth\": D}");
  const auto depth = body["depth"].get<std::int64_t>();
  if (depth < 0) throw ServiceError(400, "depth must be nonnegative");
  if (depth > config_.max_enumerate_depth)
    throw ServiceError(413, "depth " + std::to_string(depth) + " exceeds the configured cap of " +
                                std::to_string(config_.max_enumerate_depth));
  SearchOptions options;
  options.max_seeds = config_.max_seeds;
  return to_json(enumerate_c_vectors(s->initial, static_cast<int>(depth), options));
}

int serve(SessionService& service, const std::string& host, int port, const std::string& static_dir,
          std::function<void(int, std::function<void()>)> on_ready) {
  httplib::Server server;
  auto reply = [](httplib::Response& res, const Json& j, int status = 200) {
    res.status = status;
    res.set_content(j.dump(), "application/json");
  };
  auto guarded = [&](auto&& fn) {
    return [&, fn](const httplib::Request& req, httplib::Response& res) {
      try {
        reply(res, fn(req));
      } catch (const ServiceError& e) {
        reply(res, Json{{"error", e.what()}}, e.status());
      } catch (const Json::exception& e) {
        reply(res, Json{{"error", std::string("malformed request body: ") + e.what()}}, 400);
      } catch (const std::exception& e) {
        reply(res, Json{{"error", e.what()}}, 500);
      }
    };
  };
  auto body_of = [](const httplib::Request& req) { return req.body.empty() ? Json::object() : Json::parse(req.body); };

  server.Post("/api/sessions", guarded([&](const httplib::Request& req) { return service.create(body_of(req)); }));
  server.Get(R"(/api/sessions/([0-9a-f]+))",
             guarded([&](const httplib::Request& req) { return service.state(req.matches[1]); }));
  server.Post(R"(/api/sessions/([0-9a-f]+)/mutate)",
              guarded([&](const httplib::Request& req) { return service.mutate(req.matches[1], body_of(req)); }));
  server.Post(R"(/api/sessions/([0-9a-f]+)/undo)",
              guarded([&](const httplib::Request& req) { return service.undo(req.matches[1]); }));
  server.Post(R"(/api/sessions/([0-9a-f]+)/enumerate)",
              guarded([&](const httplib::Request& req) { return service.enumerate(req.matches[1], body_of(req)); }));
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) return 1;

  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    std::fprintf(stderr, "cannot bind %s:%d\n", host.c_str(), port);
    return 1;
  }
  std::fprintf(stderr, "listening on %s:%d\n", host.c_str(), bound);
  if (on_ready) on_ready(bound, [&server] { server.stop(); });
  return server.listen_after_bind() ? 0 : 1;
}

}  // namespace cluster_roots
