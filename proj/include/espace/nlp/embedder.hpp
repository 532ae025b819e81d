#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "espace/error.hpp"
#include "espace/nlp/english.hpp"
#include "espace/nlp/lemmatizer.hpp"
#include "espace/nlp/tokenizer.hpp"
#include "espace/text.hpp"

namespace espace::nlp {

using EmbeddingVector = std::vector<double>;

inline double inner_product(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::Configuration, "embedding dimensions differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline double norm(const EmbeddingVector& v) { return std::sqrt(inner_product(v, v)); }

/// Dual-encoder port: questions and contextualised answers share one space.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::string name() const = 0;
  /// Identifies the embedder and its configuration; used to key caches.
  virtual std::string fingerprint() const { return name(); }
  virtual std::size_t dimension() const = 0;
  virtual EmbeddingVector embed_question(std::string_view question) const = 0;
  /// Throws Error(EmptyInput) for an empty snippet.
  virtual EmbeddingVector embed_answer(std::string_view snippet, std::string_view context) const = 0;
};

struct HashingEmbedderOptions {
  std::size_t dimension = 512;
  double context_weight = 0.5;
  // Weight of the shared question-type cue features (0 disables them).
  double cue_weight = 1.0;
};

/// Reference embedder: term-frequency bag of lemmas hashed into buckets, L2-normalised.
///
/// Besides lemmas, words that typically signal an answer type ("because" for why,
/// "during" for when, ...) and the matching question word emit a shared cue feature,
/// so question and answer sides meet in the same buckets.
class HashingEmbedder final : public Embedder {
 public:
  explicit HashingEmbedder(HashingEmbedderOptions opts = {}) : opts_(opts) {
    if (opts_.dimension == 0) throw Error(ErrorCode::Configuration, "embedding dimension must be positive");
  }

  std::string name() const override { return "reference"; }

  std::string fingerprint() const override {
    return "reference/d=" + std::to_string(opts_.dimension) + "/ctx=" + num(opts_.context_weight) +
           "/cue=" + num(opts_.cue_weight);
  }

  std::size_t dimension() const override { return opts_.dimension; }

  EmbeddingVector embed_question(std::string_view question) const override {
    EmbeddingVector v(opts_.dimension, 0.0);
    accumulate(question, 1.0, v);
    return normalized(std::move(v));
  }

  EmbeddingVector embed_answer(std::string_view snippet, std::string_view context) const override {
    if (text::trim(snippet).empty()) throw Error(ErrorCode::EmptyInput, "cannot embed an empty snippet");
    EmbeddingVector v(opts_.dimension, 0.0);
    accumulate(snippet, 1.0, v);
    accumulate(context, opts_.context_weight, v);
    return normalized(std::move(v));
  }

  /// Features of a text: lemmas plus cue markers, in order of occurrence.
  std::vector<std::string> features(std::string_view s) const {
    std::vector<std::string> out;
    for (const auto& tok : tokenize(s)) {
      if (is_punctuation(tok.text)) continue;
      std::string w = text::lower(tok.text);
      if (stopwords().count(w)) continue;
      std::string lemma = english::auxiliaries().count(w) ? english::auxiliaries().at(w)
                          : analyze_verb(w)                ? analyze_verb(w)->lemma
                                                           : noun_lemma(w);
      out.push_back(lemma);
      if (opts_.cue_weight > 0.0) {
        auto it = cues().find(w);
        if (it == cues().end()) it = cues().find(lemma);
        if (it != cues().end()) out.push_back("#cue:" + it->second);
      }
    }
    return out;
  }

  static const english::WordMap& cues() {
    static const english::WordMap m = [] {
      english::WordMap out;
      auto add = [&](std::string_view cls, std::string_view words) {
        for (auto& w : text::split_words(words)) out.emplace(std::move(w), std::string(cls));
      };
      add("why", "why because cause reason since due therefore consequently hence result");
      add("what-for", "purpose goal aim order intend designed help allow enable so-that");
      add("how", "how method way process step procedure through using calculate compute");
      add("who", "who person people customer consumer lender borrower individual company agency "
                 "institution creditor applicant someone");
      add("where", "where place location country city region area site located");
      add("when", "when time date year month day during after before until period history "
                  "january february march april june july august september october november "
                  "december recently");
      add("what", "what definition define mean refer called type kind known consist");
      return out;
    }();
    return m;
  }

 private:
  HashingEmbedderOptions opts_;

  static std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
  }

  static const english::WordSet& stopwords() {
    static const english::WordSet s = english::make_set("the a an this these those 's");
    return s;
  }

  void accumulate(std::string_view s, double weight, EmbeddingVector& v) const {
    if (weight == 0.0) return;
    for (const auto& f : features(s)) {
      double w = weight * (f.rfind("#cue:", 0) == 0 ? opts_.cue_weight : 1.0);
      v[text::fnv1a(f) % opts_.dimension] += w;
    }
  }

  static EmbeddingVector normalized(EmbeddingVector v) {
    double n = norm(v);
    if (n > 0.0)
      for (double& x : v) x /= n;
    return v;
  }
};

/// Memoises an embedder; entries are keyed by the inner embedder's fingerprint and the
/// hashed content, so a different embedder never reuses stale vectors.
class CachingEmbedder final : public Embedder {
 public:
  explicit CachingEmbedder(std::shared_ptr<const Embedder> inner) : inner_(std::move(inner)) {}

  std::string name() const override { return inner_->name(); }
  std::string fingerprint() const override { return inner_->fingerprint(); }
  std::size_t dimension() const override { return inner_->dimension(); }

  EmbeddingVector embed_question(std::string_view q) const override {
    return lookup(key('q', q, {}), [&] { return inner_->embed_question(q); });
  }

  EmbeddingVector embed_answer(std::string_view snippet, std::string_view context) const override {
    return lookup(key('a', snippet, context), [&] { return inner_->embed_answer(snippet, context); });
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return cache_.size();
  }

 private:
  std::shared_ptr<const Embedder> inner_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::uint64_t, std::string>, EmbeddingVector> cache_;

  std::pair<std::uint64_t, std::string> key(char side, std::string_view a, std::string_view b) const {
    std::uint64_t h = text::fnv1a(inner_->fingerprint());
    h = text::fnv1a(std::string_view(&side, 1), h);
    h = text::fnv1a(a, h);
    h = text::fnv1a("\x1f", h);
    h = text::fnv1a(b, h);
    // the full content is kept so hash collisions cannot alias
    std::string full;
    full.reserve(a.size() + b.size() + 2);
    full += side;
    full += a;
    full += '\x1f';
    full += b;
    return {h, std::move(full)};
  }

  template <typename F>
  EmbeddingVector lookup(std::pair<std::uint64_t, std::string> k, F compute) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    }
    EmbeddingVector v = compute();
    std::lock_guard lock(mu_);
    return cache_.try_emplace(std::move(k), std::move(v)).first->second;
  }
};

}  // namespace espace::nlp
