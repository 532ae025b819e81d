#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "espace/nlp/english.hpp"
#include "espace/text.hpp"

namespace espace::nlp {

struct RawToken {
  std::string text;
  std::size_t offset = 0;  // byte offset into the tokenized string

  std::size_t end() const { return offset + text.size(); }
};

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

namespace detail {

// Multi-byte punctuation we split on: curly quotes, dashes, ellipsis.
inline std::size_t utf8_punct_len(std::string_view s, std::size_t i) {
  static constexpr std::string_view kMulti[] = {"\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98",
                                                "\xE2\x80\x99", "\xE2\x80\x94", "\xE2\x80\x93",
                                                "\xE2\x80\xA6"};
  for (auto m : kMulti)
    if (s.substr(i, m.size()) == m) return m.size();
  return 0;
}

inline bool is_leading_punct(char c) {
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == '{' || c == '`';
}

inline bool is_trailing_punct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?' || c == ')' ||
         c == ']' || c == '}' || c == '"' || c == '\'' || c == '%';
}

inline bool is_abbreviation(std::string_view chunk) {
  std::string low = text::lower(chunk);
  if (english::abbreviations().count(low)) return true;
  // initials such as "U.S." or "J."
  if (chunk.size() >= 4 && chunk.size() % 2 == 0) {
    for (std::size_t i = 0; i < chunk.size(); i += 2)
      if (!text::is_alpha(chunk[i]) || chunk[i + 1] != '.') return false;
    return true;
  }
  return false;
}

inline void split_clitics(std::string_view word, std::size_t offset, std::vector<RawToken>& out) {
  std::string low = text::lower(word);
  auto emit2 = [&](std::size_t cut) {
    out.push_back({std::string(word.substr(0, cut)), offset});
    out.push_back({std::string(word.substr(cut)), offset + cut});
  };
  if (low.size() > 3 && text::ends_with(low, "n't")) return emit2(low.size() - 3);
  for (std::string_view suffix : {"'s", "'re", "'ve", "'ll", "'d", "'m"}) {
    if (low.size() > suffix.size() && text::ends_with(low, suffix)) return emit2(low.size() - suffix.size());
  }
  if (low.size() > 4 && text::ends_with(low, "\xE2\x80\x99s")) return emit2(low.size() - 4);
  if (low.size() > 1 && low.back() == '\'' && low[low.size() - 2] == 's')
    return emit2(low.size() - 1);  // plural possessive: "banks'"
  out.push_back({std::string(word), offset});
}

inline void tokenize_chunk(std::string_view chunk, std::size_t offset, std::vector<RawToken>& out) {
  std::size_t b = 0, e = chunk.size();
  std::vector<RawToken> tail;
  while (b < e) {
    if (std::size_t n = utf8_punct_len(chunk, b); n > 0) {
      out.push_back({std::string(chunk.substr(b, n)), offset + b});
      b += n;
    } else if (is_leading_punct(chunk[b])) {
      out.push_back({std::string(1, chunk[b]), offset + b});
      ++b;
    } else {
      break;
    }
  }
  while (e > b) {
    bool peeled = false;
    for (std::size_t n : {3u, 1u}) {
      if (e - b < n) continue;
      std::size_t at = e - n;
      if (n == 3 && utf8_punct_len(chunk, at) == 3) {
        tail.push_back({std::string(chunk.substr(at, 3)), offset + at});
        e = at;
        peeled = true;
        break;
      }
      if (n == 1 && is_trailing_punct(chunk[at])) {
        if (chunk[at] == '.' && is_abbreviation(chunk.substr(b, e - b))) break;
        if (chunk[at] == '\'' && at > b && chunk[at - 1] == 's' && e - b > 2 &&
            at + 1 == chunk.size())
          break;  // keep plural possessive for split_clitics
        tail.push_back({std::string(1, chunk[at]), offset + at});
        e = at;
        peeled = true;
        break;
      }
    }
    if (!peeled) break;
  }
  if (e > b) {
    std::string_view core = chunk.substr(b, e - b);
    // split inner dashes "--" and em dashes
    std::size_t start = 0;
    for (std::size_t i = 0; i < core.size();) {
      std::size_t n = utf8_punct_len(core, i);
      if (n == 0 && core.substr(i, 2) == "--") n = 2;
      if (n > 0) {
        if (i > start) split_clitics(core.substr(start, i - start), offset + b + start, out);
        out.push_back({std::string(core.substr(i, n)), offset + b + i});
        i += n;
        start = i;
      } else {
        ++i;
      }
    }
    if (start < core.size()) split_clitics(core.substr(start), offset + b + start, out);
  }
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(std::move(*it));
}

}  // namespace detail

/// Splits text into word and punctuation tokens with byte offsets.
inline std::vector<RawToken> tokenize(std::string_view s) {
  std::vector<RawToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && text::is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !text::is_space(s[j])) ++j;
    if (j > i) detail::tokenize_chunk(s.substr(i, j - i), i, out);
    i = j;
  }
  return out;
}

inline bool is_punctuation(std::string_view tok) {
  if (tok.empty()) return false;
  if (detail::utf8_punct_len(tok, 0) == tok.size()) return true;
  for (char c : tok)
    if (text::is_alnum(c) || static_cast<unsigned char>(c) >= 0x80) return false;
  return true;
}

/// Sentence spans (byte offsets) of a paragraph.
inline std::vector<CharSpan> split_sentences(std::string_view paragraph) {
  std::vector<CharSpan> spans;
  auto toks = tokenize(paragraph);
  std::size_t first = 0;
  auto is_terminal = [](const std::string& t) {
    return t == "." || t == "!" || t == "?" || t == "\xE2\x80\xA6";
  };
  auto is_closer = [](const std::string& t) {
    return t == "\"" || t == "'" || t == ")" || t == "]" || t == "\xE2\x80\x9D" ||
           t == "\xE2\x80\x99";
  };
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!is_terminal(toks[i].text)) continue;
    std::size_t last = i;
    while (last + 1 < toks.size() && (is_terminal(toks[last + 1].text) || is_closer(toks[last + 1].text)))
      ++last;
    bool boundary = last + 1 == toks.size();
    if (!boundary) {
      const std::string& next = toks[last + 1].text;
      char c = next[0];
      boundary = text::is_upper(c) || text::is_digit(c) || detail::is_leading_punct(c) ||
                 static_cast<unsigned char>(c) >= 0x80;
    }
    if (boundary) {
      spans.push_back({toks[first].offset, toks[last].end()});
      first = last + 1;
      i = last;
    }
  }
  if (first < toks.size()) spans.push_back({toks[first].offset, toks.back().end()});
  return spans;
}

}  // namespace espace::nlp
