#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "espace/error.hpp"
#include "espace/kg/uri.hpp"
#include "espace/text.hpp"

namespace espace::annotate {

/// Word frequency ranks (1 = most frequent), keyed by lemma.
class FrequencyTable {
 public:
  FrequencyTable() = default;

  /// Lines `lemma \t rank`; '#' starts a comment. A lemma listed twice keeps its best rank.
  static FrequencyTable from_tsv(std::istream& in) {
    FrequencyTable t;
    t.loaded_ = true;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (text::trim(line).empty() || line[0] == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() < 2) throw Error(ErrorCode::Format, "frequency line " + std::to_string(lineno) + ": expected lemma and rank");
      std::size_t rank = 0;
      try {
        rank = std::stoul(std::string(text::trim(cols[1])));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Format, "frequency line " + std::to_string(lineno) + ": bad rank");
      }
      t.add(text::trim(cols[0]), rank);
    }
    return t;
  }

  static FrequencyTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Configuration, "cannot open frequency table " + path);
    return from_tsv(in);
  }

  void add(std::string_view word, std::size_t rank) {
    loaded_ = true;
    for (const auto& key : {text::lower(word), nlp::noun_lemma(text::lower(word))}) {
      auto [it, inserted] = ranks_.emplace(key, rank);
      if (!inserted && rank < it->second) it->second = rank;
    }
  }

  bool loaded() const { return loaded_; }

  /// (lemma, rank) pairs ordered by rank, then lemma.
  std::vector<std::pair<std::string, std::size_t>> entries() const {
    std::vector<std::pair<std::string, std::size_t>> out(ranks_.begin(), ranks_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return out;
  }
  std::size_t size() const { return ranks_.size(); }

  std::optional<std::size_t> rank(std::string_view lemma) const {
    auto it = ranks_.find(std::string(lemma));
    if (it == ranks_.end()) return std::nullopt;
    return it->second;
  }

 private:
  bool loaded_ = false;
  std::unordered_map<std::string, std::size_t> ranks_;
};

/// True iff every token lemma of the label ranks within `cutoff`.
/// Throws Error(Configuration) when the table was never loaded.
inline bool is_common_knowledge(std::string_view label, const FrequencyTable& table, std::size_t cutoff = 1000) {
  if (!table.loaded()) throw Error(ErrorCode::Configuration, "frequency table not loaded");
  auto lemmas = kg::label_lemmas(kg::label_from_uri(label));
  if (lemmas.empty()) return false;
  for (const auto& l : lemmas) {
    auto r = table.rank(l);
    if (!r || *r > cutoff) return false;
  }
  return true;
}

}  // namespace espace::annotate
