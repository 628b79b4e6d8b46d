#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "radial/animation.hpp"

namespace httplib {
class Server;
}

namespace radial {

/// Request failure carrying the HTTP status to report.
class ApiError : public std::runtime_error {
 public:
  ApiError(int status, const std::string& message) : std::runtime_error(message), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

struct SessionOptions {
  std::chrono::seconds idle_timeout{30 * 60};
  std::size_t spring_iterations = kDefaultSpringIterations;
  /// Spring-layout seed for requests that name none.
  std::uint64_t default_seed = 1;
};

struct Session;

/// In-memory exploration sessions. Every session holds a graph and its current
/// drawing; a re-root animates from that drawing and, once finished, makes the
/// final frame the next starting drawing. Thread-safe; one transition per
/// session at a time.
class SessionManager {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionManager(SessionOptions options = {},
                          std::function<Clock::time_point()> now = Clock::now);
  ~SessionManager();

  /// Body is a graph document, or a generator spec {"n", "p_edge" (or "p"),
  /// "seed"}; optional "params" {"root_radius", "phi", "steps"} and
  /// "layout_seed" for the initial spring layout (falling back to "seed", then
  /// the server default). Returns the session state.
  nlohmann::json create(const nlohmann::json& body);
  nlohmann::json state(const std::string& id);
  /// Body {"node": v, "params": {...}?}; parameter overrides apply to this
  /// transition only. Returns the timeline as JSON lines.
  std::string reroot(const std::string& id, const nlohmann::json& body);
  /// JSON lines of the last completed transition.
  std::string last_timeline(const std::string& id);
  void remove(const std::string& id);

  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t expire_idle();
  std::size_t size() const;

  /// Test hook run inside a transition while the session is marked busy.
  std::function<void()> on_transition_start;

 private:
  std::shared_ptr<Session> find(const std::string& id);
  std::string next_id();

  SessionOptions options_;
  std::function<Clock::time_point()> now_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t id_state_;
};

/// Registers the REST routes on `server`.
void register_routes(httplib::Server& server, SessionManager& sessions);

/// Serves until the process is stopped. `on_bound` receives the bound port
/// (useful with port 0). Returns false if binding failed.
bool serve(const std::string& host, int port, SessionOptions options = {},
           const std::function<void(int)>& on_bound = {});

}  // namespace radial
