#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "espace/error.hpp"
#include "espace/nlp/tokenizer.hpp"
#include "espace/text.hpp"

namespace espace::nlp {

/// Length in Unicode code points.
inline std::size_t char_length(std::string_view s) { return text::codepoint_offset(s, s.size()); }

/// Longest prefix of at most `chars` code points.
inline std::string_view char_prefix(std::string_view s, std::size_t chars) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      if (count == chars) return s.substr(0, i);
      ++count;
    }
  }
  return s;
}

class Summarizer {
 public:
  virtual ~Summarizer() = default;
  virtual std::string name() const = 0;
  /// Output is at most `budget` characters; throws Error(Configuration) when budget is 0.
  virtual std::string summarize(std::string_view text, std::size_t budget) const = 0;
};

/// Reference summarizer: the first sentence, cut at a word boundary with a trailing
/// "..." when it does not fit the budget.
class LeadSentenceSummarizer final : public Summarizer {
 public:
  static constexpr std::string_view kEllipsis = "...";

  std::string name() const override { return "reference"; }

  std::string summarize(std::string_view input, std::size_t budget) const override {
    if (budget == 0) throw Error(ErrorCode::Configuration, "summary budget must be positive");
    std::string_view body = text::trim(input);
    if (body.empty()) return {};
    auto spans = split_sentences(body);
    std::string_view first = spans.empty() ? body : body.substr(spans[0].begin, spans[0].size());
    if (char_length(first) <= budget) return std::string(first);
    if (budget <= kEllipsis.size()) return std::string(char_prefix(first, budget));
    std::string_view cut = char_prefix(first, budget - kEllipsis.size());
    // back off to the last word boundary when we cut inside a word
    if (cut.size() < first.size() && !text::is_space(first[cut.size()])) {
      auto space = cut.find_last_of(' ');
      if (space != std::string_view::npos && space > 0) cut = cut.substr(0, space);
    }
    cut = text::trim(cut);
    return std::string(cut) + std::string(kEllipsis);
  }
};

}  // namespace espace::nlp
