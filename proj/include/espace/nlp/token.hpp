#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace espace::nlp {

enum class Pos { Noun, Propn, Verb, Aux, Adj, Adv, Adp, Det, Pron, Cconj, Sconj, Part, Num, Punct, Sym, X };

inline std::string_view to_string(Pos p) {
  switch (p) {
    case Pos::Noun: return "NOUN";
    case Pos::Propn: return "PROPN";
    case Pos::Verb: return "VERB";
    case Pos::Aux: return "AUX";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Adp: return "ADP";
    case Pos::Det: return "DET";
    case Pos::Pron: return "PRON";
    case Pos::Cconj: return "CCONJ";
    case Pos::Sconj: return "SCONJ";
    case Pos::Part: return "PART";
    case Pos::Num: return "NUM";
    case Pos::Punct: return "PUNCT";
    case Pos::Sym: return "SYM";
    case Pos::X: return "X";
  }
  return "X";
}

inline std::optional<Pos> pos_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Pos::X); ++i)
    if (to_string(static_cast<Pos>(i)) == s) return static_cast<Pos>(i);
  return std::nullopt;
}

inline bool is_nominal(Pos p) { return p == Pos::Noun || p == Pos::Propn; }

struct ParsedToken {
  std::size_t index = 0;
  std::string text;
  std::string lemma;
  Pos pos = Pos::X;
  std::string dep_label;
  std::size_t head_index = 0;
  std::size_t offset = 0;  // byte offset into the sentence

  std::size_t end() const { return offset + text.size(); }
  bool is_root() const { return head_index == index; }
  friend bool operator==(const ParsedToken&, const ParsedToken&) = default;
};

using Sentence = std::vector<ParsedToken>;

/// True when the tokens form a single-rooted dependency tree with consecutive indices.
inline bool is_valid_tree(std::span<const ParsedToken> toks) {
  if (toks.empty()) return false;
  std::size_t roots = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].index != i || toks[i].head_index >= toks.size()) return false;
    if (toks[i].is_root()) ++roots;
  }
  if (roots != 1) return false;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::size_t cur = i, steps = 0;
    while (!toks[cur].is_root()) {
      cur = toks[cur].head_index;
      if (++steps > toks.size()) return false;
    }
  }
  return true;
}

/// Chain of token indices from `i` up to the root, inclusive.
inline std::vector<std::size_t> ancestors(std::span<const ParsedToken> toks, std::size_t i) {
  std::vector<std::size_t> chain{i};
  while (!toks[chain.back()].is_root()) chain.push_back(toks[chain.back()].head_index);
  return chain;
}

inline std::vector<std::vector<std::size_t>> children_of(std::span<const ParsedToken> toks) {
  std::vector<std::vector<std::size_t>> kids(toks.size());
  for (const auto& t : toks)
    if (!t.is_root()) kids[t.head_index].push_back(t.index);
  return kids;
}

/// Renders tokens with their original inter-token spacing.
inline std::string detokenize(std::span<const ParsedToken> toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i > 0 && toks[i].offset > toks[i - 1].end()) out += ' ';
    out += toks[i].text;
  }
  return out;
}

}  // namespace espace::nlp
