#include "flood_tools/service.hpp"

#include <optional>
#include <random>

#include <httplib.h>

#include "flood/errors.hpp"
#include "flood/mpq.hpp"
#include "flood/split.hpp"
#include "flood_tools/engine.hpp"
#include "json_io.hpp"

namespace flood::tools {

SessionRecord::SessionRecord(std::string id_, InstanceDocument doc, SearchBudget budget_)
    : id(std::move(id_)),
      graph(std::make_shared<const ColoredGraph>(doc.graph())),
      document(std::move(doc)),
      variant(document.variant),
      budget(budget_),
      state(graph),
      created(std::chrono::system_clock::now()) {}

namespace {

HttpResponse problem(int status, const std::string& code, const std::string& message,
                     const std::string& field = {}) {
  json j;
  j["code"] = code;
  j["message"] = message;
  if (!field.empty()) j["field"] = field;
  return {status, j.dump()};
}

HttpResponse ok(const json& j, int status = 200) { return {status, j.dump()}; }

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    while (i < path.size() && path[i] == '/') ++i;
    std::size_t j = i;
    while (j < path.size() && path[j] != '/') ++j;
    if (j > i) parts.emplace_back(path.substr(i, j - i));
    i = j;
  }
  return parts;
}

int int_field(const json& j, const std::string& key, const std::string& prefix = {}) {
  if (!j.contains(key)) throw ParseError(prefix + key, "missing");
  if (!j[key].is_number_integer()) throw ParseError(prefix + key, "expected an integer");
  return j[key].get<int>();
}

SearchBudget budget_from(const json& j, SearchBudget b) {
  if (j.contains("max_states")) b.max_states = int_field(j, "max_states", "budget.");
  if (j.contains("max_depth")) b.max_depth = int_field(j, "max_depth", "budget.");
  if (j.contains("time_limit_ms")) b.time_limit = std::chrono::milliseconds(int_field(j, "time_limit_ms", "budget."));
  b.validate();
  return b;
}

SearchBudget budget_from(const std::map<std::string, std::string>& query, SearchBudget b) {
  auto number = [&](const char* key) -> std::optional<long long> {
    auto it = query.find(key);
    if (it == query.end()) return std::nullopt;
    try {
      std::size_t used = 0;
      long long v = std::stoll(it->second, &used);
      if (used != it->second.size() || v < 1) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError(key, "expected a positive integer");
    }
  };
  if (auto v = number("budget")) b.max_states = *v;
  if (auto v = number("time_ms")) b.time_limit = std::chrono::milliseconds(*v);
  if (auto v = number("max_depth")) b.max_depth = static_cast<int>(*v);
  return b;
}

json session_json(const SessionRecord& s, const GameState& state) {
  json j;
  j["session_id"] = s.id;
  j["variant"] = to_string(s.variant.mode);
  if (s.variant.pivot) j["pivot"] = *s.variant.pivot;
  j["k"] = s.graph->k();
  j["state"] = state_json(state);
  return j;
}

}  // namespace

GameService::GameService(ServiceOptions options) : options_(options) {}

std::size_t GameService::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::string GameService::next_id() {
  std::lock_guard lock(id_mutex_);
  // Counter mixed through a fixed permutation: unique per service instance.
  std::uint64_t x = ++id_counter_ + options_.id_seed * 0x9e3779b97f4a7c15ULL;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::shared_ptr<SessionRecord> GameService::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpResponse GameService::handle(std::string_view method, std::string_view path,
                                 const std::map<std::string, std::string>& query, std::string_view body) {
  try {
    const auto parts = split_path(path);
    if (parts.size() < 2 || parts[0] != "api" || parts[1] != "game") {
      return problem(404, "not_found", "no such endpoint: " + std::string(path));
    }
    if (parts.size() == 2) {
      if (method != "POST") return problem(405, "method_not_allowed", "use POST /api/game");
      return create(body);
    }
    auto session = find(parts[2]);
    if (!session) return problem(404, "unknown_session", "no session " + parts[2], "session_id");
    const std::string action = parts.size() > 3 ? parts[3] : "";
    if (parts.size() > 4) return problem(404, "not_found", "no such endpoint: " + std::string(path));
    struct Route {
      const char* action;
      const char* method;
    };
    static constexpr Route routes[] = {
        {"", "GET"}, {"move", "POST"}, {"undo", "POST"}, {"hint", "GET"}, {"solution", "GET"}};
    for (const auto& r : routes) {
      if (action != r.action) continue;
      if (method != r.method) {
        return problem(405, "method_not_allowed", std::string("use ") + r.method + " " + std::string(path));
      }
      if (action.empty()) return get(*session);
      if (action == "move") return move(*session, body);
      if (action == "undo") return undo(*session);
      if (action == "hint") return hint(*session, query);
      return solution(*session, query);
    }
    return problem(404, "not_found", "no such endpoint: " + std::string(path));
  } catch (const ParseError& e) {
    return problem(400, "invalid_input", e.what(), e.field());
  } catch (const VariantViolation& e) {
    return problem(409, "variant_violation", e.what());
  } catch (const RecognitionError& e) {
    return problem(422, "recognition_failed", e.what());
  } catch (const BudgetExceeded& e) {
    json j;
    j["code"] = "budget_exhausted";
    j["message"] = e.what();
    j["best_lower_bound"] = e.best_lower_bound();
    return {503, j.dump()};
  } catch (const Error& e) {
    return problem(400, "invalid_input", e.what());
  } catch (const json::exception& e) {
    return problem(400, "invalid_json", e.what());
  }
}

HttpResponse GameService::create(std::string_view body) {
  json req;
  try {
    req = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON body: ") + e.what());
  }
  if (!req.is_object()) throw ParseError("", "body must be a JSON object");
  InstanceDocument doc;
  if (req.contains("colors")) {
    doc = parse_instance(req.dump());
  } else if (req.contains("instance")) {
    try {
      doc = parse_instance(req["instance"].dump());
    } catch (const ParseError& e) {
      throw ParseError("instance." + e.field(), e.what());
    }
  } else if (req.contains("generator")) {
    const json& g = req["generator"];
    if (!g.is_object()) throw ParseError("generator", "expected an object");
    if (!g.contains("kind") || !g["kind"].is_string()) throw ParseError("generator.kind", "missing");
    std::uint64_t seed = 0;
    if (g.contains("seed")) {
      if (!g["seed"].is_number_unsigned()) throw ParseError("generator.seed", "expected a non-negative integer");
      seed = g["seed"].get<std::uint64_t>();
    }
    doc = gen_random(parse_generator_kind(g["kind"].get<std::string>()), int_field(g, "n", "generator."),
                     int_field(g, "k", "generator."), seed);
  } else {
    throw ParseError("instance", "body needs an instance document or generator parameters");
  }
  if (req.contains("variant") && !req.contains("colors")) {
    const json& v = req["variant"];
    if (v == "free") {
      doc.variant = Variant::free_game();
    } else if (v == "fixed") {
      if (!req.contains("pivot")) throw ParseError("pivot", "fixed variant requires a pivot");
      doc.variant = Variant::fixed_game(int_field(req, "pivot"));
    } else {
      throw ParseError("variant", "expected \"free\" or \"fixed\"");
    }
    try {
      validate(doc);
    } catch (const ParseError& e) {
      throw ParseError(e.field(), e.what());
    }
  }
  SearchBudget budget = options_.default_budget;
  if (req.contains("budget")) {
    if (!req["budget"].is_object()) throw ParseError("budget", "expected an object");
    budget = budget_from(req["budget"], budget);
  }
  auto session = std::make_shared<SessionRecord>(next_id(), std::move(doc), budget);
  json out = session_json(*session, session->state);
  out["instance"] = document_json(session->document);
  {
    std::unique_lock lock(sessions_mutex_);
    sessions_.emplace(session->id, session);
  }
  return ok(out, 201);
}

HttpResponse GameService::get(SessionRecord& s) {
  std::lock_guard lock(s.mutex);
  return ok(session_json(s, s.state));
}

HttpResponse GameService::move(SessionRecord& s, std::string_view body) {
  json req;
  try {
    req = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON body: ") + e.what());
  }
  if (!req.is_object()) throw ParseError("", "body must be a JSON object");
  Move m{int_field(req, "vertex"), int_field(req, "color")};
  std::lock_guard lock(s.mutex);
  if (!s.graph->contains_vertex(m.vertex)) throw ParseError("vertex", "unknown vertex " + std::to_string(m.vertex));
  if (!s.graph->contains_color(m.color)) {
    throw ParseError("color", "color " + std::to_string(m.color) + " outside 1.." + std::to_string(s.graph->k()));
  }
  s.state = s.state.apply(m, s.variant);
  return ok(session_json(s, s.state));
}

HttpResponse GameService::undo(SessionRecord& s) {
  std::lock_guard lock(s.mutex);
  if (s.state.history().empty()) return problem(409, "nothing_to_undo", "no moves have been played");
  std::vector<Move> moves = s.state.history();
  moves.pop_back();
  s.state = GameState::replay(s.graph, moves, s.variant);
  return ok(session_json(s, s.state));
}

namespace {

struct Snapshot {
  GameState state;
  Variant variant;
  SearchBudget budget;
};

Snapshot snapshot(SessionRecord& s, const std::map<std::string, std::string>& query) {
  SearchBudget b = budget_from(query, s.budget);
  std::lock_guard lock(s.mutex);
  return {s.state, s.variant, b};
}

// Free games on split or interval boards are answered by the exact engines.
std::optional<EngineResult> structured(const Snapshot& snap) {
  if (snap.variant.is_fixed()) return std::nullopt;
  const ColoredGraph board = snap.state.graph().recolored(snap.state.colors());
  const auto& adj = board.adjacency();
  if (!is_split(adj) && !is_interval(adj)) return std::nullopt;
  try {
    return run_engine(board, snap.variant, Engine::automatic, snap.budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

HttpResponse GameService::hint(SessionRecord& s, const std::map<std::string, std::string>& query) {
  Snapshot snap = snapshot(s, query);
  if (snap.state.monochrome()) return problem(409, "already_solved", "the board is monochrome");
  json out;
  out["session_id"] = s.id;
  out["move_count"] = snap.state.history().size();
  if (auto r = structured(snap)) {
    out["move"] = move_json(r->solution.witness.front());
    out["remaining_opt"] = r->solution.opt;
    out["optimal"] = true;
    out["engine"] = r->engine;
    return ok(out);
  }
  Hint h = flood::hint(snap.state, snap.variant, snap.budget);
  out["move"] = move_json(h.move);
  out["remaining_opt"] = h.remaining_opt;
  out["optimal"] = h.optimal;
  out["engine"] = "oracle";
  return ok(out);
}

HttpResponse GameService::solution(SessionRecord& s, const std::map<std::string, std::string>& query) {
  Snapshot snap = snapshot(s, query);
  json out;
  out["session_id"] = s.id;
  out["move_count"] = snap.state.history().size();
  std::optional<EngineResult> r = structured(snap);
  if (!r) {
    r = EngineResult{solve_exact(snap.state.graph().recolored(snap.state.colors()), snap.variant, snap.budget),
                     "oracle", {}};
  }
  out["opt"] = r->solution.opt;
  out["witness"] = moves_json(r->solution.witness);
  out["engine"] = r->engine;
  out["optimal"] = true;
  return ok(out);
}

struct HttpServer::Impl {
  explicit Impl(GameService& s) : service(s) {}
  GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service, std::string static_dir)
    : impl_(std::make_unique<Impl>(service)) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    HttpResponse r = impl_->service.handle(req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_content(r.body, r.status >= 400 ? "application/problem+json" : "application/json");
  };
  if (!static_dir.empty()) impl_->server.set_mount_point("/", static_dir);
  impl_->server.Get(R"(/api/.*)", dispatch);
  impl_->server.Post(R"(/api/.*)", dispatch);
  impl_->server.Put(R"(/api/.*)", dispatch);
  impl_->server.Delete(R"(/api/.*)", dispatch);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace flood::tools
