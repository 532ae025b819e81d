#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "espace/nlp/english.hpp"
#include "espace/text.hpp"

namespace espace::nlp {

enum class VerbForm { Base, ThirdSingular, Past, Gerund };

struct VerbAnalysis {
  std::string lemma;
  VerbForm form = VerbForm::Base;
};

namespace detail {

inline bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

inline bool known_verb(const std::string& w) { return english::verbs().count(w) > 0; }

inline std::optional<std::string> restore_stem(const std::string& stem) {
  if (stem.size() < 2) return std::nullopt;
  if (known_verb(stem)) return stem;
  if (known_verb(stem + "e")) return stem + "e";
  if (stem.size() >= 3 && stem.back() == stem[stem.size() - 2] && !is_vowel(stem.back())) {
    std::string undoubled = stem.substr(0, stem.size() - 1);
    if (known_verb(undoubled)) return undoubled;
  }
  return std::nullopt;
}

}  // namespace detail

/// Lemma of a word read as a noun (plural folding). Input should be lowercase.
/// Idempotent: noun_lemma(noun_lemma(w)) == noun_lemma(w).
inline std::string noun_lemma(std::string_view word) {
  static const english::WordMap extra = english::make_map(
      "movies:movie cookies:cookie calories:calorie rookies:rookie zombies:zombie "
      "species:species series:series");
  std::string w(word);
  const auto& irr = english::irregular_nouns();
  if (auto it = irr.find(w); it != irr.end()) return it->second;
  if (auto it = extra.find(w); it != extra.end()) return it->second;
  if (w.size() <= 3 || english::invariant_nouns().count(w)) return w;
  for (char c : w)
    if (!text::is_alpha(c) && c != '-') return w;

  std::string out = w;
  if (text::ends_with(w, "ies") && w.size() > 4) {
    out = w.substr(0, w.size() - 3) + "y";
  } else if (text::ends_with(w, "sses") || text::ends_with(w, "xes") ||
             text::ends_with(w, "ches") || text::ends_with(w, "shes") ||
             text::ends_with(w, "zzes")) {
    out = w.substr(0, w.size() - 2);
  } else if (text::ends_with(w, "ss") || text::ends_with(w, "us") || text::ends_with(w, "is")) {
    out = w;
  } else if (w.back() == 's') {
    out = w.substr(0, w.size() - 1);
  }
  if (auto it = irr.find(out); it != irr.end()) return it->second;
  return out;
}

/// Recognizes `word` (lowercase) as an inflection of a known or regular verb.
/// Only forms whose lemma is in the verb lexicon are reported.
inline std::optional<VerbAnalysis> analyze_verb(std::string_view word) {
  std::string w(word);
  if (auto it = english::irregular_verbs().find(w); it != english::irregular_verbs().end()) {
    // "read", "set", "put": base and past share a spelling.
    if (detail::known_verb(w) && it->second == w) return VerbAnalysis{w, VerbForm::Base};
    return VerbAnalysis{it->second, VerbForm::Past};
  }
  if (detail::known_verb(w)) return VerbAnalysis{w, VerbForm::Base};
  if (w.size() > 4 && text::ends_with(w, "ing")) {
    if (auto s = detail::restore_stem(w.substr(0, w.size() - 3)))
      return VerbAnalysis{*s, VerbForm::Gerund};
    if (text::ends_with(w, "ying")) {
      std::string s = w.substr(0, w.size() - 4) + "ie";
      if (detail::known_verb(s)) return VerbAnalysis{s, VerbForm::Gerund};
    }
  }
  if (w.size() > 3 && text::ends_with(w, "ied")) {
    std::string s = w.substr(0, w.size() - 3) + "y";
    if (detail::known_verb(s)) return VerbAnalysis{s, VerbForm::Past};
  }
  if (w.size() > 3 && text::ends_with(w, "ed")) {
    if (auto s = detail::restore_stem(w.substr(0, w.size() - 2)))
      return VerbAnalysis{*s, VerbForm::Past};
  }
  if (w.size() > 3 && text::ends_with(w, "ies")) {
    std::string s = w.substr(0, w.size() - 3) + "y";
    if (detail::known_verb(s)) return VerbAnalysis{s, VerbForm::ThirdSingular};
  }
  if (w.size() > 3 && text::ends_with(w, "es")) {
    std::string s = w.substr(0, w.size() - 2);
    if (detail::known_verb(s)) return VerbAnalysis{s, VerbForm::ThirdSingular};
  }
  if (w.size() > 2 && w.back() == 's' && !text::ends_with(w, "ss")) {
    std::string s = w.substr(0, w.size() - 1);
    if (detail::known_verb(s)) return VerbAnalysis{s, VerbForm::ThirdSingular};
  }
  return std::nullopt;
}

/// Lemma of a word read as a verb; unknown verbs fall back to suffix stripping.
inline std::string verb_lemma(std::string_view word) {
  std::string w = text::lower(word);
  if (auto it = english::auxiliaries().find(w); it != english::auxiliaries().end())
    return it->second;
  if (auto a = analyze_verb(w)) return a->lemma;
  auto needs_e = [](const std::string& s) {
    return !s.empty() && (s.back() == 'v' || s.back() == 'z' || s.back() == 'c' ||
                          s.back() == 'u' || text::ends_with(s, "at") || text::ends_with(s, "iz"));
  };
  if (w.size() > 5 && text::ends_with(w, "ing")) {
    std::string s = w.substr(0, w.size() - 3);
    return needs_e(s) ? s + "e" : s;
  }
  if (w.size() > 4 && text::ends_with(w, "ied")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 4 && text::ends_with(w, "ed")) {
    std::string s = w.substr(0, w.size() - 2);
    return needs_e(s) ? s + "e" : s;
  }
  if (w.size() > 3 && w.back() == 's' && !text::ends_with(w, "ss")) return noun_lemma(w);
  return w;
}

}  // namespace espace::nlp
