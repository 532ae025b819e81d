#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "espace/annotate/centrality.hpp"
#include "espace/annotate/frequency.hpp"
#include "espace/kg/graph.hpp"
#include "espace/kg/uri.hpp"
#include "espace/nlp/tokenizer.hpp"

namespace espace::annotate {

/// A mention of a concept. Offsets count Unicode code points of the input text.
struct Annotation {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string concept_uri;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Lemma-level unit of text: one piece of a token, with the token's byte span.
struct TextPiece {
  std::string lemma;
  std::size_t byte_begin = 0;
  std::size_t byte_end = 0;
  bool token_start = false;
  bool token_end = false;
};

inline std::vector<TextPiece> lemma_pieces(std::string_view text) {
  std::vector<TextPiece> out;
  for (const auto& tok : nlp::tokenize(text)) {
    auto lemmas = kg::label_lemmas(tok.text);
    for (std::size_t i = 0; i < lemmas.size(); ++i)
      out.push_back({lemmas[i], tok.offset, tok.end(), i == 0, i + 1 == lemmas.size()});
  }
  return out;
}

struct Match {
  std::size_t byte_begin = 0;
  std::size_t byte_end = 0;
  std::string concept_uri;

  friend bool operator==(const Match&, const Match&) = default;
};

/// Finds concept labels in text: left to right, longest label first, whole tokens only,
/// never overlapping.
class ConceptMatcher {
 public:
  explicit ConceptMatcher(const kg::KnowledgeGraph& graph) {
    for (const auto& [uri, c] : graph.concepts) {
      auto words = text::split_words(c.label);
      if (words.empty()) continue;
      max_len_ = std::max(max_len_, words.size());
      labels_.emplace(text::join(words, " "), uri);
    }
  }

  std::vector<Match> find(std::string_view text) const {
    auto pieces = lemma_pieces(text);
    std::vector<Match> out;
    std::size_t i = 0;
    while (i < pieces.size()) {
      bool matched = false;
      if (pieces[i].token_start) {
        std::size_t longest = std::min(max_len_, pieces.size() - i);
        for (std::size_t len = longest; len >= 1 && !matched; --len) {
          const auto& last = pieces[i + len - 1];
          if (!last.token_end) continue;
          std::string key;
          for (std::size_t k = i; k < i + len; ++k) {
            if (k > i) key += ' ';
            key += pieces[k].lemma;
          }
          if (auto it = labels_.find(key); it != labels_.end()) {
            out.push_back({pieces[i].byte_begin, last.byte_end, it->second});
            i += len;
            matched = true;
          }
        }
      }
      if (!matched) ++i;
    }
    return out;
  }

 private:
  std::unordered_map<std::string, std::string> labels_;
  std::size_t max_len_ = 0;
};

struct AnnotateOptions {
  std::size_t rank_cutoff = 1000;
};

/// Concept mentions minus those of common-knowledge concepts and of concepts lying on no
/// shortest path between two others.
inline std::vector<Annotation> annotate(std::string_view text, const kg::KnowledgeGraph& graph,
                                        const ConceptMatcher& matcher, const CentralityIndex& centrality,
                                        const FrequencyTable& frequency, const AnnotateOptions& opts = {}) {
  std::vector<Annotation> out;
  for (const auto& m : matcher.find(text)) {
    auto bc = centrality.find(m.concept_uri);
    if (bc == centrality.end() || bc->second == 0.0) continue;
    if (is_common_knowledge(graph.at(m.concept_uri).label, frequency, opts.rank_cutoff)) continue;
    out.push_back({text::codepoint_offset(text, m.byte_begin), text::codepoint_offset(text, m.byte_end), m.concept_uri});
  }
  return out;
}

inline std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Escaped text with each annotation wrapped in an anchor carrying the concept uri.
inline std::string to_html(std::string_view text, const std::vector<Annotation>& annotations) {
  // code point offsets back to bytes
  std::vector<std::size_t> byte_at;
  for (std::size_t i = 0; i < text.size(); ++i)
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) byte_at.push_back(i);
  byte_at.push_back(text.size());
  std::string out;
  std::size_t pos = 0;
  for (const auto& a : annotations) {
    std::size_t b = byte_at.at(a.start), e = byte_at.at(a.end);
    out += html_escape(text.substr(pos, b - pos));
    out += "<a class=\"es-concept\" href=\"#\" data-concept=\"" + html_escape(a.concept_uri) + "\">";
    out += html_escape(text.substr(b, e - b));
    out += "</a>";
    pos = e;
  }
  out += html_escape(text.substr(pos));
  return out;
}

}  // namespace espace::annotate
