#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "httplib.h"
#include "json.hpp"

#include "espace/error.hpp"
#include "espace/service/engine.hpp"

namespace espace::service {

/// The currently served engine. Loading a new snapshot swaps the pointer; requests in
/// flight keep the engine they started with.
class EngineSlot {
 public:
  std::shared_ptr<const Engine> get() const {
    std::lock_guard lock(mu_);
    return engine_;
  }
  void set(std::shared_ptr<const Engine> e) {
    std::lock_guard lock(mu_);
    engine_ = std::move(e);
  }

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const Engine> engine_;
};

struct HttpOptions {
  std::size_t annotate_max_bytes = 64 * 1024;
  std::string static_dir;  // mounted at "/" when non-empty
};

namespace detail {

inline void send_json(httplib::Response& res, int status, const nlohmann::ordered_json& j) {
  res.status = status;
  res.set_content(j.dump(), "application/json");
}

inline void send_error(httplib::Response& res, int status, const std::string& message) {
  send_json(res, status, {{"error", message}});
}

}  // namespace detail

/// Registers /health, /overview/{uri}, /annotate, /taxonomy and /concepts.
inline void install_routes(httplib::Server& server, const EngineSlot& slot, HttpOptions opts) {
  using detail::send_error;
  using detail::send_json;

  server.Get("/health", [&slot](const httplib::Request&, httplib::Response& res) {
    auto engine = slot.get();
    if (!engine) return send_json(res, 200, {{"status", "no snapshot"}});
    send_json(res, 200, engine->health_json());
  });

  server.Get(R"(/overview/(.+))", [&slot](const httplib::Request& req, httplib::Response& res) {
    auto engine = slot.get();
    if (!engine) return send_error(res, 503, "no snapshot");
    std::string uri = req.matches[1];
    const auto& g = engine->snapshot().graph;
    if (!g.contains(uri) && g.contains(g.ns + uri)) uri = g.ns + uri;
    try {
      res.set_content(engine->overview_json(uri), "application/json");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::MissingConcept) return send_error(res, 404, e.what());
      send_error(res, 500, e.what());
    }
  });

  server.Post("/annotate", [&slot, opts](const httplib::Request& req, httplib::Response& res) {
    auto engine = slot.get();
    if (!engine) return send_error(res, 503, "no snapshot");
    if (req.body.size() > opts.annotate_max_bytes + 1024) return send_error(res, 413, "request too large");
    std::string text;
    bool html = false;
    try {
      auto j = nlohmann::json::parse(req.body);
      text = j.at("text").get<std::string>();
      html = j.value("html", false);
    } catch (const nlohmann::json::exception&) {
      return send_error(res, 400, "expected {\"text\": string, \"html\"?: bool}");
    }
    if (text.size() > opts.annotate_max_bytes) return send_error(res, 413, "text exceeds the size cap");
    try {
      send_json(res, 200, engine->annotate_json(text, html));
    } catch (const Error& e) {
      send_error(res, e.code() == ErrorCode::Configuration ? 503 : 500, e.what());
    }
  });

  server.Get("/taxonomy", [&slot](const httplib::Request&, httplib::Response& res) {
    auto engine = slot.get();
    if (!engine) return send_error(res, 503, "no snapshot");
    send_json(res, 200, engine->taxonomy_json());
  });

  server.Get("/concepts", [&slot](const httplib::Request& req, httplib::Response& res) {
    auto engine = slot.get();
    if (!engine) return send_error(res, 503, "no snapshot");
    std::size_t limit = 50;
    if (req.has_param("limit")) {
      try {
        limit = std::stoul(req.get_param_value("limit"));
      } catch (const std::exception&) {
        return send_error(res, 400, "limit must be a non-negative integer");
      }
    }
    send_json(res, 200, engine->concepts_json(req.get_param_value("q"), limit));
  });

  if (!opts.static_dir.empty() && !server.set_mount_point("/", opts.static_dir))
    throw Error(ErrorCode::Configuration, "static directory not found: " + opts.static_dir);
}

}  // namespace espace::service
