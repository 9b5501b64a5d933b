#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "flood/game.hpp"
#include "flood/instances.hpp"
#include "flood/oracle.hpp"

namespace flood::tools {

struct HttpResponse {
  int status = 200;
  std::string body;
};

struct SessionRecord {
  std::string id;
  std::shared_ptr<const ColoredGraph> graph;
  InstanceDocument document;
  Variant variant;
  SearchBudget budget;
  GameState state;
  std::chrono::system_clock::time_point created;
  std::mutex mutex;

  SessionRecord(std::string id, InstanceDocument doc, SearchBudget budget);
};

struct ServiceOptions {
  SearchBudget default_budget{2'000'000, 64, std::chrono::milliseconds(10'000)};
  std::uint64_t id_seed = 0;
};

/// Game sessions behind the JSON API. Each session is mutated under its own
/// mutex; hints and solutions run on a snapshot, so the session stays playable.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});

  HttpResponse handle(std::string_view method, std::string_view path,
                      const std::map<std::string, std::string>& query, std::string_view body);

  std::size_t session_count() const;

 private:
  std::shared_ptr<SessionRecord> find(const std::string& id) const;
  HttpResponse create(std::string_view body);
  HttpResponse get(SessionRecord& s);
  HttpResponse move(SessionRecord& s, std::string_view body);
  HttpResponse undo(SessionRecord& s);
  HttpResponse hint(SessionRecord& s, const std::map<std::string, std::string>& query);
  HttpResponse solution(SessionRecord& s, const std::map<std::string, std::string>& query);
  std::string next_id();

  ServiceOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::unordered_map<std::string, std::shared_ptr<SessionRecord>> sessions_;
  std::mutex id_mutex_;
  std::uint64_t id_counter_ = 0;
};

/// HTTP front end over GameService.
class HttpServer {
 public:
  explicit HttpServer(GameService& service, std::string static_dir = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port,
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace flood::tools
