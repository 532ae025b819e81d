#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "espace/error.hpp"
#include "espace/nlp/parser.hpp"
#include "espace/text.hpp"

namespace espace::kg {

struct RawDocument {
  std::string title;
  std::string content;  // plain text or HTML
};

struct Paragraph {
  std::size_t id = 0;
  std::size_t doc_id = 0;
  std::string text;

  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

struct SentenceRecord {
  std::size_t id = 0;
  std::size_t paragraph_id = 0;
  nlp::CharSpan span;  // byte offsets into the paragraph text
  std::string text;

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

struct Document {
  std::size_t id = 0;
  std::string title;
  std::vector<std::size_t> paragraph_ids;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Ids are positions: documents[i].id == i, and likewise for paragraphs and sentences.
struct DocumentCorpus {
  std::vector<Document> documents;
  std::vector<Paragraph> paragraphs;
  std::vector<SentenceRecord> sentences;

  const Paragraph& paragraph(std::size_t id) const {
    if (id >= paragraphs.size()) throw Error(ErrorCode::Format, "unknown paragraph " + std::to_string(id));
    return paragraphs[id];
  }

  const SentenceRecord& sentence(std::size_t id) const {
    if (id >= sentences.size()) throw Error(ErrorCode::Format, "unknown sentence " + std::to_string(id));
    return sentences[id];
  }

  std::uint64_t content_hash() const {
    std::uint64_t h = text::kFnvOffset;
    for (const auto& d : documents) {
      h = text::fnv1a(d.title, h);
      h = text::fnv1a("\x1e", h);
      for (auto p : d.paragraph_ids) {
        h = text::fnv1a(paragraphs[p].text, h);
        h = text::fnv1a("\x1f", h);
      }
    }
    return h;
  }

  friend bool operator==(const DocumentCorpus&, const DocumentCorpus&) = default;
};

namespace detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x110000) {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline bool is_block_tag(std::string_view name) {
  static const auto tags = nlp::english::make_set(
      "p div br li ul ol h1 h2 h3 h4 h5 h6 tr td th table section article header footer "
      "blockquote pre dd dt dl title hr nav aside main figure figcaption form");
  return tags.count(std::string(name)) > 0;
}

}  // namespace detail

/// Decodes the common named entities and numeric character references.
inline std::string decode_entities(std::string_view s) {
  static const nlp::english::WordMap named = nlp::english::make_map(
      "amp:& lt:< gt:> quot:\" apos:' nbsp:\xC2\xA0 ndash:\xE2\x80\x93 mdash:\xE2\x80\x94 "
      "lsquo:\xE2\x80\x98 rsquo:\xE2\x80\x99 ldquo:\xE2\x80\x9C rdquo:\xE2\x80\x9D "
      "hellip:\xE2\x80\xA6 copy:\xC2\xA9 reg:\xC2\xAE euro:\xE2\x82\xAC");
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    auto semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += '&';
      continue;
    }
    std::string_view body = s.substr(i + 1, semi - i - 1);
    if (!body.empty() && body[0] == '#') {
      bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
      std::string digits(body.substr(hex ? 2 : 1));
      try {
        std::size_t used = 0;
        unsigned long cp = std::stoul(digits, &used, hex ? 16 : 10);
        if (used == digits.size() && !digits.empty()) {
          detail::append_utf8(out, static_cast<std::uint32_t>(cp));
          i = semi;
          continue;
        }
      } catch (const std::exception&) {
      }
    } else if (auto it = named.find(std::string(body)); it != named.end()) {
      out += it->second;
      i = semi;
      continue;
    }
    out += '&';
  }
  return out;
}

inline bool looks_like_html(std::string_view s) {
  std::string low = text::lower(s.substr(0, 4096));
  for (std::string_view marker : {"<html", "<body", "<p>", "<p ", "<div", "<br", "<!doctype", "<h1", "<li"})
    if (low.find(marker) != std::string::npos) return true;
  return false;
}

/// Strips markup; block-level elements become paragraph breaks. Script, style and title bodies are dropped.
inline std::string html_to_text(std::string_view html) {
  std::string out;
  std::size_t i = 0;
  while (i < html.size()) {
    if (html[i] != '<') {
      out += html[i++];
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      auto close = html.find("-->", i + 4);
      i = close == std::string_view::npos ? html.size() : close + 3;
      continue;
    }
    auto close = html.find('>', i);
    if (close == std::string_view::npos) {
      out += html.substr(i);
      break;
    }
    std::string_view tag = html.substr(i + 1, close - i - 1);
    bool closing = !tag.empty() && tag[0] == '/';
    if (closing) tag.remove_prefix(1);
    std::size_t n = 0;
    while (n < tag.size() && (text::is_alnum(tag[n]) || tag[n] == '!')) ++n;
    std::string name = text::lower(tag.substr(0, n));
    i = close + 1;
    if (!closing && (name == "script" || name == "style" || name == "title")) {
      auto end = text::lower(html.substr(i)).find("</" + name);
      i = end == std::string::npos ? html.size() : i + end;
      continue;
    }
    if (detail::is_block_tag(name)) out += "\n\n";
  }
  return decode_entities(out);
}

/// Paragraphs separated by blank lines, with internal whitespace collapsed.
inline std::vector<std::string> split_paragraphs(std::string_view body) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    std::string p = text::squash_spaces(current);
    if (!p.empty()) out.push_back(std::move(p));
    current.clear();
  };
  std::size_t start = 0;
  while (start <= body.size()) {
    auto nl = body.find('\n', start);
    std::string_view line = body.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (text::trim(line).empty()) {
      flush();
    } else {
      current += line;
      current += ' ';
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  flush();
  return out;
}

/// Throws Error(EmptyCorpus) when no document has text. Empty documents are skipped.
inline DocumentCorpus ingest_corpus(const std::vector<RawDocument>& raw, const nlp::DependencyParser& parser) {
  DocumentCorpus corpus;
  for (const auto& doc : raw) {
    std::string body = looks_like_html(doc.content) ? html_to_text(doc.content) : doc.content;
    // non-breaking spaces count as whitespace for paragraph and sentence splitting
    for (std::size_t p = 0; (p = body.find("\xC2\xA0", p)) != std::string::npos;) body.replace(p, 2, " ");
    auto paragraphs = split_paragraphs(body);
    if (paragraphs.empty()) continue;
    Document d{corpus.documents.size(), std::string(text::trim(doc.title)), {}};
    for (auto& ptext : paragraphs) {
      Paragraph para{corpus.paragraphs.size(), d.id, std::move(ptext)};
      for (const auto& span : parser.split_sentences(para.text)) {
        corpus.sentences.push_back(
            {corpus.sentences.size(), para.id, span, para.text.substr(span.begin, span.size())});
      }
      d.paragraph_ids.push_back(para.id);
      corpus.paragraphs.push_back(std::move(para));
    }
    corpus.documents.push_back(std::move(d));
  }
  if (corpus.documents.empty()) throw Error(ErrorCode::EmptyCorpus, "no document contains text");
  return corpus;
}

}  // namespace espace::kg
