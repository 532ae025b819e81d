#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "espace/kg/uri.hpp"
#include "espace/nlp/english.hpp"
#include "espace/nlp/token.hpp"
#include "espace/nlp/tokenizer.hpp"

namespace espace::kg {

struct Occurrence {
  std::size_t sentence_id = 0;
  nlp::CharSpan span;  // byte offsets into the sentence text

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence& a, const Occurrence& b) {
    if (auto c = a.sentence_id <=> b.sentence_id; c != 0) return c;
    if (auto c = a.span.begin <=> b.span.begin; c != 0) return c;
    return a.span.end <=> b.span.end;
  }
};

/// A noun phrase found in one sentence.
struct Syntagm {
  std::string surface;  // exact sentence text, determiners included
  std::string lemma;    // space-joined lemmas of the classifying tokens
  std::string uri;
  std::size_t begin = 0;  // token range [begin, end) within the sentence
  std::size_t end = 0;
  std::size_t head = 0;
  std::vector<std::string> nominal_parts;  // lemmas of the nominal tokens, in order
  std::vector<Occurrence> occurrences;

  bool contains(std::size_t token) const { return token >= begin && token < end; }
};

namespace detail {

inline bool possessive_determiner(const nlp::ParsedToken& t) {
  return nlp::english::possessive_pronouns().count(text::lower(t.text)) > 0;
}

// Left dependents that stay inside a noun phrase.
inline bool np_modifier(const nlp::ParsedToken& t, const nlp::ParsedToken& head) {
  const auto& l = t.dep_label;
  if (l == "det" || l == "amod" || l == "compound" || l == "nummod") return true;
  if (l == "poss") return possessive_determiner(t);
  if (l == "advmod") return head.pos == nlp::Pos::Adj || head.pos == nlp::Pos::Num || head.dep_label == "amod";
  if (l == "punct") return t.text == "-";
  return false;
}

inline bool lemma_token(const nlp::ParsedToken& t) {
  if (nlp::is_nominal(t.pos)) return true;
  if (t.pos == nlp::Pos::Adj || (t.pos == nlp::Pos::Verb && t.dep_label == "amod"))
    return !nlp::english::qualitative_adjectives().count(text::lower(t.text));
  return false;
}

inline std::string token_lemma(const nlp::ParsedToken& t) {
  std::string low = text::lower(t.text);
  return nlp::is_nominal(t.pos) ? nlp::noun_lemma(low) : low;
}

}  // namespace detail

/// Maximal noun phrases: a nominal head (not itself a compound modifier) plus its
/// contiguous left determiners, adjectives, compounds and numerals. Only the
/// classifying tokens (nouns and non-qualitative adjectives) enter the lemma.
inline std::vector<Syntagm> extract_syntagms(const nlp::Sentence& s, std::size_t sentence_id = 0,
                                             std::string_view ns = kDefaultNamespace) {
  std::vector<Syntagm> out;
  std::vector<bool> taken(s.size(), false);
  for (std::size_t h = 0; h < s.size(); ++h) {
    const auto& head = s[h];
    if (!nlp::is_nominal(head.pos) || taken[h]) continue;
    if (head.dep_label == "compound" && !head.is_root() && nlp::is_nominal(s[head.head_index].pos)) continue;
    if (nlp::is_punctuation(head.text)) continue;
    std::size_t begin = h;
    while (begin > 0) {
      const auto& t = s[begin - 1];
      if (taken[begin - 1] || t.is_root()) break;
      std::size_t parent = t.head_index;
      if (parent < begin || parent > h) break;
      if (!detail::np_modifier(t, s[parent])) break;
      --begin;
    }
    while (begin < h && s[begin].dep_label == "punct") ++begin;
    Syntagm syn;
    syn.begin = begin;
    syn.end = h + 1;
    syn.head = h;
    std::vector<std::string> lemmas;
    for (std::size_t k = begin; k <= h; ++k) {
      taken[k] = true;
      if (!detail::lemma_token(s[k])) continue;
      lemmas.push_back(detail::token_lemma(s[k]));
      if (nlp::is_nominal(s[k].pos)) syn.nominal_parts.push_back(lemmas.back());
    }
    syn.surface = nlp::detokenize(std::span(s).subspan(begin, h + 1 - begin));
    syn.lemma = text::join(lemmas, " ");
    try {
      syn.uri = mint_uri(syn.lemma, ns);
    } catch (const Error&) {
      continue;  // nothing lexical left, e.g. a bare symbol
    }
    syn.lemma = label_from_uri(syn.uri, ns);
    syn.occurrences.push_back({sentence_id, {s[begin].offset, s[h].end()}});
    out.push_back(std::move(syn));
  }
  return out;
}

}  // namespace espace::kg
