#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "espace/error.hpp"
#include "espace/nlp/lemmatizer.hpp"
#include "espace/text.hpp"

namespace espace::nlp {

struct SenseEntry {
  std::string sense_id;
  std::string lemma;
  std::vector<std::string> hypernyms;  // most specific first, excluding sense_id itself

  friend bool operator==(const SenseEntry&, const SenseEntry&) = default;
};

/// Lexical knowledge base: senses, their lemmas and single-parent hypernym links.
///
/// Loads either a TSV dump (`sense_id \t lemma \t hypernym_sense_id`, first line
/// per lemma is its most frequent sense) or a WordNet 3.x `data.noun` / `index.noun` pair.
class LexicalDatabase {
 public:
  struct Sense {
    std::string id;
    std::string lemma;  // canonical (first listed) lemma
    std::optional<std::string> hypernym;
  };

  static LexicalDatabase from_tsv(std::istream& in) {
    LexicalDatabase db;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (text::trim(line).empty() || line[0] == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() < 2)
        throw Error(ErrorCode::Format, "lexicon line " + std::to_string(lineno) + ": expected sense_id, lemma[, hypernym]");
      std::string hyper = cols.size() > 2 ? std::string(text::trim(cols[2])) : "";
      if (hyper == "-") hyper.clear();
      db.add(std::string(text::trim(cols[0])), std::string(text::trim(cols[1])),
             hyper.empty() ? std::nullopt : std::optional<std::string>(hyper));
    }
    db.validate();
    return db;
  }

  static LexicalDatabase load_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Configuration, "cannot open lexical database " + path);
    return from_tsv(in);
  }

  /// WordNet 3.x noun database. Hypernyms follow the first `@`/`@i` pointer.
  static LexicalDatabase from_wordnet(std::istream& data_noun, std::istream& index_noun) {
    LexicalDatabase db;
    std::string line;
    while (std::getline(data_noun, line)) {
      if (line.empty() || line[0] == ' ') continue;  // license header
      std::istringstream ls(line.substr(0, line.find('|')));
      std::string offset, lexfile, sstype, wcnt_hex;
      ls >> offset >> lexfile >> sstype >> wcnt_hex;
      std::size_t wcnt = std::stoul(wcnt_hex, nullptr, 16);
      std::vector<std::string> words;
      for (std::size_t i = 0; i < wcnt; ++i) {
        std::string word, lexid;
        ls >> word >> lexid;
        if (auto paren = word.find('('); paren != std::string::npos) word.erase(paren);
        for (char& c : word)
          if (c == '_') c = ' ';
        words.push_back(text::lower(word));
      }
      std::size_t pcnt = 0;
      ls >> pcnt;
      std::optional<std::string> hyper;
      for (std::size_t i = 0; i < pcnt; ++i) {
        std::string sym, target, pos, srcdst;
        ls >> sym >> target >> pos >> srcdst;
        if (!hyper && (sym == "@" || sym == "@i")) hyper = target + "-" + pos;
      }
      std::string id = offset + "-n";
      if (words.empty()) throw Error(ErrorCode::Format, "synset without words: " + offset);
      db.senses_.emplace(id, Sense{id, words.front(), hyper});
    }
    while (std::getline(index_noun, line)) {
      if (line.empty() || line[0] == ' ') continue;
      std::istringstream ls(line);
      std::string lemma, pos;
      std::size_t synset_cnt = 0, p_cnt = 0;
      ls >> lemma >> pos >> synset_cnt >> p_cnt;
      for (std::size_t i = 0; i < p_cnt; ++i) {
        std::string sym;
        ls >> sym;
      }
      std::size_t sense_cnt = 0, tagsense_cnt = 0;
      ls >> sense_cnt >> tagsense_cnt;
      for (char& c : lemma)
        if (c == '_') c = ' ';
      for (std::size_t i = 0; i < synset_cnt; ++i) {
        std::string off;
        ls >> off;
        db.by_lemma_[lemma].push_back(off + "-n");
      }
    }
    db.validate();
    return db;
  }

  static LexicalDatabase load_wordnet(const std::string& dict_dir) {
    std::ifstream data(dict_dir + "/data.noun"), index(dict_dir + "/index.noun");
    if (!data || !index) throw Error(ErrorCode::Configuration, "cannot open WordNet files in " + dict_dir);
    return from_wordnet(data, index);
  }

  /// TSV file, or a WordNet dict directory.
  static LexicalDatabase load(const std::string& path) {
    std::ifstream probe(path + "/data.noun");
    if (probe) return load_wordnet(path);
    return load_tsv(path);
  }

  std::size_t size() const { return senses_.size(); }

  const Sense* sense(const std::string& id) const {
    auto it = senses_.find(id);
    return it == senses_.end() ? nullptr : &it->second;
  }

  /// Sense ids for a lemma, most frequent first.
  const std::vector<std::string>& senses_of(const std::string& lemma) const {
    static const std::vector<std::string> none;
    auto it = by_lemma_.find(lemma);
    return it == by_lemma_.end() ? none : it->second;
  }

  std::vector<std::string> hypernym_chain(const std::string& id) const {
    std::vector<std::string> chain;
    const Sense* s = sense(id);
    while (s && s->hypernym) {
      chain.push_back(*s->hypernym);
      s = sense(*s->hypernym);
    }
    return chain;
  }

  SenseEntry entry(const std::string& id) const {
    const Sense* s = sense(id);
    if (!s) throw Error(ErrorCode::MissingConcept, "unknown sense " + id);
    return SenseEntry{s->id, s->lemma, hypernym_chain(id)};
  }

 private:
  std::map<std::string, Sense> senses_;
  std::unordered_map<std::string, std::vector<std::string>> by_lemma_;

  void add(const std::string& id, std::string lemma, std::optional<std::string> hyper) {
    for (char& c : lemma)
      if (c == '_') c = ' ';
    lemma = text::lower(lemma);
    auto [it, inserted] = senses_.emplace(id, Sense{id, lemma, hyper});
    if (!inserted && hyper && it->second.hypernym != hyper)
      throw Error(ErrorCode::Format, "sense " + id + " listed with two hypernyms");
    auto& list = by_lemma_[lemma];
    if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
  }

  void validate() const {
    for (const auto& [id, s] : senses_) {
      std::unordered_set<std::string> seen{id};
      const Sense* cur = &s;
      while (cur->hypernym) {
        if (!seen.insert(*cur->hypernym).second)
          throw Error(ErrorCode::Format, "hypernym cycle through sense " + id);
        cur = sense(*cur->hypernym);
        if (!cur) break;  // dangling hypernym ends the chain
      }
    }
  }
};

/// Word-sense disambiguation port.
class SenseDisambiguator {
 public:
  virtual ~SenseDisambiguator() = default;
  virtual std::string name() const = 0;
  virtual std::optional<SenseEntry> disambiguate(std::string_view syntagm,
                                                 std::string_view sentence_context) const = 0;
};

/// Most-frequent-sense lookup by lemma; the sentence context is ignored.
class MostFrequentSense final : public SenseDisambiguator {
 public:
  explicit MostFrequentSense(const LexicalDatabase& db) : db_(db) {}

  std::string name() const override { return "most-frequent-sense"; }

  std::optional<SenseEntry> disambiguate(std::string_view syntagm, std::string_view) const override {
    std::string surface = text::squash_spaces(text::lower(syntagm));
    for (char& c : surface)
      if (c == '_') c = ' ';
    if (surface.empty()) return std::nullopt;
    std::vector<std::string> folded;
    for (const auto& w : text::split_words(surface)) folded.push_back(noun_lemma(w));
    for (const auto& key : {surface, text::join(folded, " ")}) {
      const auto& ids = db_.senses_of(key);
      if (!ids.empty()) return db_.entry(ids.front());
    }
    return std::nullopt;
  }

 private:
  const LexicalDatabase& db_;
};

}  // namespace espace::nlp
