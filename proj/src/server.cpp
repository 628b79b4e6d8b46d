#include "radial/server.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <httplib.h>

#include "radial/io.hpp"

namespace radial {

using nlohmann::json;

struct Session {
  Session(std::string id_in, Graph g, AnimationParams p, Drawing d)
      : id(std::move(id_in)), graph(std::move(g)), params(p), drawing(std::move(d)) {}

  const std::string id;
  const Graph graph;
  const AnimationParams params;

  // Held for the whole of a transition; try_lock failure means one is in flight.
  std::mutex busy;

  // Guards everything below.
  std::mutex state_mutex;
  Drawing drawing;
  std::optional<RootedTree> tree;
  std::string timeline;

  // Guarded by the manager's mutex.
  SessionManager::Clock::time_point last_used;
};

namespace {

template <typename T>
T field(const json& j, const char* name, T fallback) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ApiError(400, fmt::format("'{}' has the wrong type", name));
  }
}

AnimationParams params_from(const json& body, AnimationParams base) {
  auto it = body.find("params");
  if (it == body.end() || it->is_null()) return base;
  if (!it->is_object()) throw ApiError(400, "'params' must be an object");
  base.layout.root_radius = field(*it, "root_radius", base.layout.root_radius);
  base.layout.arc_angle = field(*it, "phi", base.layout.arc_angle);
  const auto steps = field<std::int64_t>(*it, "steps", static_cast<std::int64_t>(base.steps));
  if (steps < 0) throw ApiError(400, "'steps' must be non-negative");
  base.steps = static_cast<std::size_t>(steps);
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw ApiError(400, e.what());
  }
  return base;
}

json params_to_json(const AnimationParams& p) {
  return {{"root_radius", p.layout.root_radius}, {"phi", p.layout.arc_angle}, {"steps", p.steps}};
}

Graph graph_from_body(const json& body, std::uint64_t default_seed) {
  try {
    if (body.contains("nodes")) return graph_from_json(body);
    if (!body.contains("n")) throw ApiError(400, "expected a graph or a generator spec");
    const auto n = field<std::int64_t>(body, "n", 0);
    const double p = body.contains("p_edge") ? field(body, "p_edge", 0.0) : field(body, "p", 0.0);
    const auto seed = field<std::uint64_t>(body, "seed", default_seed);
    if (n < 1) throw ApiError(400, "'n' must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw ApiError(400, "edge probability must be in [0, 1]");
    return generate_random_graph(static_cast<std::size_t>(n), p, seed);
  } catch (const DisconnectedGraphError& e) {
    throw ApiError(422, e.what());
  } catch (const FormatError& e) {
    throw ApiError(400, e.what());
  } catch (const GraphError& e) {
    // Generator exhaustion lands here as well as invalid uploads.
    throw ApiError(body.contains("nodes") ? 400 : 422, e.what());
  }
}

json state_json(Session& s) {
  std::lock_guard lock(s.state_mutex);
  return {{"id", s.id},
          {"graph", graph_to_json(s.graph)},
          {"drawing", drawing_to_json(s.drawing)},
          {"tree", s.tree ? tree_to_json(*s.tree) : json(nullptr)},
          {"params", params_to_json(s.params)}};
}

}  // namespace

SessionManager::SessionManager(SessionOptions options, std::function<Clock::time_point()> now)
    : options_(options), now_(std::move(now)), id_state_(std::random_device{}()) {}

SessionManager::~SessionManager() = default;

std::string SessionManager::next_id() {
  // splitmix64 step: unique for 2^64 calls, not meant to be secret.
  std::uint64_t z = (id_state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return fmt::format("{:016x}", z ^ (z >> 31));
}

json SessionManager::create(const json& body) {
  if (!body.is_object()) throw ApiError(400, "request body must be a JSON object");
  Graph g = graph_from_body(body, options_.default_seed);
  const AnimationParams params = params_from(body, AnimationParams{});
  const auto layout_seed = field<std::uint64_t>(body, "layout_seed", field<std::uint64_t>(body, "seed", options_.default_seed));
  SpringParams spring;
  spring.rest_length = params.layout.root_radius;
  Drawing initial = force_directed_layout(g, options_.spring_iterations, layout_seed, spring);

  std::shared_ptr<Session> session;
  {
    std::lock_guard lock(mutex_);
    std::string id = next_id();
    while (sessions_.count(id) != 0) id = next_id();
    session = std::make_shared<Session>(id, std::move(g), params, std::move(initial));
    session->last_used = now_();
    sessions_.emplace(id, session);
  }
  return state_json(*session);
}

std::shared_ptr<Session> SessionManager::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError(404, "unknown session '" + id + "'");
  it->second->last_used = now_();
  return it->second;
}

json SessionManager::state(const std::string& id) { return state_json(*find(id)); }

std::string SessionManager::reroot(const std::string& id, const json& body) {
  std::shared_ptr<Session> s = find(id);
  if (!body.is_object()) throw ApiError(400, "request body must be a JSON object");
  auto node = body.find("node");
  if (node == body.end() || !node->is_number_integer()) throw ApiError(400, "'node' must be an integer");
  const auto v = node->get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= s->graph.node_count())
    throw ApiError(404, fmt::format("unknown node {}", v));
  const AnimationParams params = params_from(body, s->params);

  std::unique_lock busy(s->busy, std::try_to_lock);
  if (!busy.owns_lock()) throw ApiError(409, "a transition is already in flight for this session");
  if (on_transition_start) on_transition_start();

  Drawing d_old;
  EdgeSet old_edges;
  {
    std::lock_guard lock(s->state_mutex);
    d_old = s->drawing;
    old_edges = s->tree ? s->tree->edges() : s->graph.edges();
  }
  const Timeline tl = animate(s->graph, d_old, static_cast<NodeId>(v), params, old_edges);
  std::string jsonl = timeline_to_jsonl(tl);
  {
    std::lock_guard lock(s->state_mutex);
    s->drawing = tl.last();
    s->tree = *tl.tree;
    s->timeline = jsonl;
  }
  return jsonl;
}

std::string SessionManager::last_timeline(const std::string& id) {
  std::shared_ptr<Session> s = find(id);
  std::lock_guard lock(s->state_mutex);
  if (s->timeline.empty()) throw ApiError(404, "session has no completed transition");
  return s->timeline;
}

void SessionManager::remove(const std::string& id) {
  std::lock_guard lock(mutex_);
  if (sessions_.erase(id) == 0) throw ApiError(404, "unknown session '" + id + "'");
}

std::size_t SessionManager::expire_idle() {
  std::lock_guard lock(mutex_);
  const auto cutoff = now_() - options_.idle_timeout;
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (it->second->last_used < cutoff) {
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

namespace {

constexpr const char* kJson = "application/json";
constexpr const char* kJsonLines = "application/x-ndjson";

void send_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(json{{"error", message}}.dump(), kJson);
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw ApiError(400, std::string("malformed JSON: ") + e.what());
  }
}

template <typename F>
httplib::Server::Handler guarded(SessionManager& sessions, F handler) {
  return [&sessions, handler](const httplib::Request& req, httplib::Response& res) {
    try {
      sessions.expire_idle();
      handler(req, res);
    } catch (const ApiError& e) {
      send_error(res, e.status(), e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, e.what());
    }
  };
}

}  // namespace

void register_routes(httplib::Server& server, SessionManager& sessions) {
  server.Post("/sessions", guarded(sessions, [&](const httplib::Request& req, httplib::Response& res) {
    res.status = 201;
    res.set_content(sessions.create(parse_body(req)).dump(), kJson);
  }));
  server.Get("/sessions/:id", guarded(sessions, [&](const httplib::Request& req, httplib::Response& res) {
    res.set_content(sessions.state(req.path_params.at("id")).dump(), kJson);
  }));
  server.Post("/sessions/:id/reroot",
              guarded(sessions, [&](const httplib::Request& req, httplib::Response& res) {
                res.set_content(sessions.reroot(req.path_params.at("id"), parse_body(req)),
                                kJsonLines);
              }));
  server.Get("/sessions/:id/timeline",
             guarded(sessions, [&](const httplib::Request& req, httplib::Response& res) {
               auto lines = std::make_shared<std::vector<std::string>>();
               std::istringstream in(sessions.last_timeline(req.path_params.at("id")));
               for (std::string line; std::getline(in, line);) lines->push_back(line + '\n');
               // One JSON record per chunk, sent as fast as the client reads.
               res.set_chunked_content_provider(
                   kJsonLines, [lines, next = std::size_t{0}](std::size_t, httplib::DataSink& sink) mutable {
                     if (next < lines->size()) {
                       const std::string& line = (*lines)[next++];
                       return sink.write(line.data(), line.size());
                     }
                     sink.done();
                     return true;
                   });
             }));
  server.Delete("/sessions/:id", guarded(sessions, [&](const httplib::Request& req, httplib::Response& res) {
    sessions.remove(req.path_params.at("id"));
    res.status = 204;
  }));
}

bool serve(const std::string& host, int port, SessionOptions options,
           const std::function<void(int)>& on_bound) {
  SessionManager sessions(options);
  httplib::Server server;
  register_routes(server, sessions);
  const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) return false;
  if (on_bound) on_bound(bound);
  return server.listen_after_bind();
}

}  // namespace radial
