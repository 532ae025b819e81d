#pragma once

#include <string>
#include <string_view>

#include "httplib.h"
#include "json.hpp"

#include "espace/error.hpp"
#include "espace/nlp/embedder.hpp"

namespace espace::service {

/// Embedder behind an HTTP endpoint (e.g. a sentence-transformers dual encoder).
///
/// POST {"role": "question"|"answer", "text": ..., "context": ...}
/// -> {"embedding": [...]} with `dimension` entries.
class ExternalHttpEmbedder final : public nlp::Embedder {
 public:
  ExternalHttpEmbedder(std::string url, std::size_t dimension) : url_(std::move(url)), dimension_(dimension) {
    auto scheme_end = url_.find("://");
    auto path_start = url_.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    host_ = url_.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : url_.substr(path_start);
  }

  std::string name() const override { return "external"; }
  std::string fingerprint() const override { return "external:" + url_ + ":" + std::to_string(dimension_); }
  std::size_t dimension() const override { return dimension_; }

  nlp::EmbeddingVector embed_question(std::string_view q) const override { return call("question", q, {}); }

  nlp::EmbeddingVector embed_answer(std::string_view snippet, std::string_view context) const override {
    if (snippet.empty()) throw Error(ErrorCode::EmptyInput, "empty answer snippet");
    return call("answer", snippet, context);
  }

 private:
  std::string url_, host_, path_;
  std::size_t dimension_;

  nlp::EmbeddingVector call(const char* role, std::string_view text, std::string_view context) const {
    httplib::Client cli(host_);
    nlohmann::json req{{"role", role}, {"text", text}, {"context", context}};
    auto res = cli.Post(path_, req.dump(), "application/json");
    if (!res || res->status != 200) throw Error(ErrorCode::Io, "embedding service unavailable at " + url_);
    try {
      auto v = nlohmann::json::parse(res->body).at("embedding").get<nlp::EmbeddingVector>();
      if (v.size() != dimension_) throw Error(ErrorCode::Format, "embedding service returned a wrong dimension");
      return v;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Format, std::string("bad embedding response: ") + e.what());
    }
  }
};

}  // namespace espace::service
