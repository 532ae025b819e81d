#pragma once

#include <optional>
#include <string>
#include <vector>

#include "espace/nlp/english.hpp"
#include "espace/nlp/lemmatizer.hpp"
#include "espace/nlp/token.hpp"
#include "espace/nlp/tokenizer.hpp"
#include "espace/text.hpp"

namespace espace::nlp {

struct TaggedToken {
  std::string text;
  std::string lower;
  std::size_t offset = 0;
  Pos pos = Pos::X;
  std::string lemma;
  std::optional<VerbAnalysis> verb;  // set when a verb reading exists
  bool possessive_pronoun = false;
  bool relative_pronoun = false;
  bool complementizer = false;
};

namespace detail {

inline bool is_number(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (text::is_digit(c)) digit = true;
    else if (c != ',' && c != '.' && c != '-' && c != '$') return false;
  }
  return digit;
}

inline bool adjective_suffix(std::string_view w) {
  for (std::string_view suf : {"ous", "ful", "able", "ible", "ive", "ic", "ical", "less", "ish", "ial", "ary"})
    if (w.size() > suf.size() + 2 && text::ends_with(w, suf)) return true;
  return w.size() > 5 && text::ends_with(w, "al") && !text::ends_with(w, "ral") &&
         !text::ends_with(w, "val");
}

inline bool noun_suffix(std::string_view w) {
  for (std::string_view suf : {"tion", "sion", "ment", "ness", "ity", "ance", "ence", "ship", "ism", "ist", "er", "or", "ure", "age"})
    if (w.size() > suf.size() + 1 && text::ends_with(w, suf)) return true;
  return false;
}

// First-pass lexical category, before context.
inline Pos lexical_pos(const TaggedToken& t, bool sentence_initial) {
  const std::string& w = t.lower;
  if (is_punctuation(t.text)) return Pos::Punct;
  if (is_number(t.text) || english::number_words().count(w) ||
      w == "one" || (w.find('-') != std::string::npos && english::is_number_word(w))) return Pos::Num;
  if (w == "%" || w == "$") return Pos::Sym;
  if (w == "n't" || w == "not" || w == "\xE2\x80\x99t") return Pos::Part;
  bool capitalized = text::starts_with_upper(t.text) && t.text != "I";
  auto closed = [&]() -> std::optional<Pos> {
    if (english::possessive_pronouns().count(w)) return Pos::Pron;
    if (english::determiners().count(w)) return Pos::Det;
    if (english::pronouns().count(w)) return Pos::Pron;
    if (w == "who" || w == "whom" || w == "which" || w == "what") return Pos::Pron;
    if (w == "where" || w == "when" || w == "why" || w == "how") return Pos::Adv;
    if (english::auxiliaries().count(w)) return Pos::Aux;
    if (english::coordinators().count(w)) return Pos::Cconj;
    if (english::subordinators().count(w)) return Pos::Sconj;
    if (w == "as" || english::prepositions().count(w)) return Pos::Adp;
    return std::nullopt;
  };
  if (!capitalized || sentence_initial) {
    if (auto p = closed()) return *p;
  } else if (auto p = closed(); p && *p != Pos::Adj) {
    // Capitalized function words mid-sentence ("In", "The") are still function words,
    // except "may"/"will" which are likelier names or months.
    if (w != "may" && w != "will" && w != "march") return *p;
  }
  if (capitalized && !sentence_initial) return Pos::Propn;
  if (english::adverbs().count(w)) return Pos::Adv;
  if (english::adjectives().count(w)) return Pos::Adj;
  if (t.verb) return Pos::Verb;
  if (english::month_names().count(w)) return Pos::Propn;
  if (w.size() > 3 && text::ends_with(w, "ly")) return Pos::Adv;
  if (adjective_suffix(w) && !noun_suffix(w) && !english::suffix_exceptions().count(w)) return Pos::Adj;
  if (w.size() > 4 && text::ends_with(w, "ed")) return Pos::Verb;
  if (w.size() > 5 && text::ends_with(w, "ing")) return Pos::Verb;
  if (capitalized && sentence_initial && w.back() != 's' && !noun_suffix(w)) return Pos::Propn;
  return Pos::Noun;
}

inline VerbForm verb_form_of(const TaggedToken& t) {
  if (t.verb) return t.verb->form;
  if (text::ends_with(t.lower, "ing")) return VerbForm::Gerund;
  if (text::ends_with(t.lower, "ed")) return VerbForm::Past;
  return VerbForm::Base;
}

}  // namespace detail

/// Deterministic lexicon-and-context part-of-speech tagger.
class Tagger {
 public:
  std::vector<TaggedToken> tag(const std::vector<RawToken>& raw) const {
    std::vector<TaggedToken> toks;
    toks.reserve(raw.size());
    for (const auto& r : raw) {
      TaggedToken t;
      t.text = r.text;
      t.lower = text::lower(r.text);
      t.offset = r.offset;
      t.verb = analyze_verb(t.lower);
      toks.push_back(std::move(t));
    }
    std::size_t first_word = 0;
    while (first_word < toks.size() && is_punctuation(toks[first_word].text)) ++first_word;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      toks[i].pos = detail::lexical_pos(toks[i], i == first_word);
      toks[i].possessive_pronoun = english::possessive_pronouns().count(toks[i].lower) > 0;
    }
    disambiguate(toks);
    for (auto& t : toks) t.lemma = lemma_for(t);
    return toks;
  }

 private:
  static bool noun_like(Pos p) { return p == Pos::Noun || p == Pos::Propn; }

  static bool np_start(const TaggedToken& t) {
    return t.pos == Pos::Det || t.possessive_pronoun || t.pos == Pos::Num ||
           (t.pos == Pos::Pron && !t.relative_pronoun) || t.pos == Pos::Propn;
  }

  static bool has_verb_reading(const TaggedToken& t) {
    return t.verb.has_value() || t.pos == Pos::Verb;
  }

  static bool has_noun_reading(const TaggedToken& t) {
    if (t.pos == Pos::Propn) return false;
    if (!t.verb) return t.pos == Pos::Noun;
    // plural nouns and bare forms double as nouns; participles mostly do not
    return t.verb->form == VerbForm::Base || t.verb->form == VerbForm::ThirdSingular ||
           t.verb->form == VerbForm::Gerund;
  }

  static const english::WordSet& pronominal_determiners() {
    static const english::WordSet s = english::make_set(
        "all some any each both either neither this these those another enough whichever whatever");
    return s;
  }

  static const english::WordSet& approximators() {
    static const english::WordSet s = english::make_set("about around over under nearly almost roughly");
    return s;
  }

  static bool subject_pronoun(const TaggedToken& t) {
    static const english::WordSet s =
        english::make_set("i you he she it we they who which that someone everyone nobody something");
    return t.pos == Pos::Pron && !t.possessive_pronoun && s.count(t.lower) > 0;
  }

  // NP tokens followed by a verb, starting at i.
  static bool clause_follows(const std::vector<TaggedToken>& toks, std::size_t i) {
    std::size_t j = i;
    bool nominal = false;
    while (j < toks.size()) {
      const auto& t = toks[j];
      if (t.pos == Pos::Det || t.pos == Pos::Adj || t.pos == Pos::Num || noun_like(t.pos) ||
          (t.pos == Pos::Pron && !t.relative_pronoun) || t.lower == "'s") {
        if (noun_like(t.pos) || t.pos == Pos::Pron) nominal = true;
        ++j;
        continue;
      }
      break;
    }
    if (!nominal || j >= toks.size()) return false;
    return toks[j].pos == Pos::Aux || toks[j].pos == Pos::Verb || toks[j].verb.has_value() ||
           (toks[j].pos == Pos::Adv && j + 1 < toks.size() &&
            (toks[j + 1].pos == Pos::Verb || toks[j + 1].pos == Pos::Aux));
  }

  void disambiguate(std::vector<TaggedToken>& toks) const {
    bool verb_seen = false;
    const std::size_t n = toks.size();
    auto next_of = [&](std::size_t i) -> const TaggedToken* { return i + 1 < n ? &toks[i + 1] : nullptr; };
    for (std::size_t i = 0; i < n; ++i) {
      auto& t = toks[i];
      const TaggedToken* prev = i > 0 ? &toks[i - 1] : nullptr;
      const TaggedToken* next = next_of(i);
      // previous token skipping adverbs and negation
      const TaggedToken* prev_core = nullptr;
      for (std::size_t k = i; k-- > 0;) {
        if (toks[k].pos == Pos::Adv || (toks[k].pos == Pos::Part && toks[k].lower != "to")) continue;
        prev_core = &toks[k];
        break;
      }

      if (t.pos == Pos::Sconj || (t.pos == Pos::Punct && (t.text == ";" || t.text == ":" || t.text == ",")) ||
          (t.pos == Pos::Adv && english::wh_words().count(t.lower)))
        verb_seen = false;

      if (t.lower == "'s" || t.lower == "\xE2\x80\x99s") {
        bool after_nominal = prev && (noun_like(prev->pos) || prev->pos == Pos::Pron);
        bool np_next = next && (next->pos == Pos::Noun || next->pos == Pos::Adj ||
                                next->pos == Pos::Propn || next->pos == Pos::Num ||
                                (has_noun_reading(*next) && next->verb &&
                                 next->verb->form == VerbForm::Base));
        if (after_nominal && np_next && prev->pos != Pos::Pron) {
          t.pos = Pos::Part;
        } else {
          t.pos = Pos::Aux;
        }
      } else if (t.lower == "'" && prev && text::ends_with(prev->lower, "s")) {
        t.pos = Pos::Part;
      } else if (t.lower == "to") {
        const TaggedToken* after = next;
        std::size_t k = i + 1;
        while (after && after->pos == Pos::Adv && k + 1 < n) after = &toks[++k];
        bool verb_next = after && ((after->verb && after->verb->form == VerbForm::Base) ||
                                   (after->pos == Pos::Aux && (after->lower == "be" || after->lower == "have")));
        if (verb_next && after->pos != Pos::Det) t.pos = Pos::Part;
        else t.pos = Pos::Adp;
      } else if (t.lower == "that") {
        if (!next || next->pos == Pos::Punct) t.pos = Pos::Pron;
        else if (next->pos == Pos::Det || subject_pronoun(*next) || next->possessive_pronoun) {
          t.pos = Pos::Sconj;
          t.complementizer = true;
        } else if (next->pos == Pos::Aux || next->pos == Pos::Adv ||
                   (next->verb && !(next->pos == Pos::Noun || next->pos == Pos::Propn) &&
                    next->verb->form != VerbForm::Base)) {
          t.pos = Pos::Pron;
          t.relative_pronoun = prev && (noun_like(prev->pos) || prev->pos == Pos::Pron);
        } else if (clause_follows(toks, i + 1)) {
          t.pos = Pos::Sconj;
          t.complementizer = true;
        } else {
          t.pos = Pos::Det;
        }
      } else if ((t.lower == "which" || t.lower == "who" || t.lower == "whom") && prev &&
                 (noun_like(prev->pos) || prev->pos == Pos::Punct || prev->pos == Pos::Pron)) {
        t.relative_pronoun = true;
      } else if (t.pos == Pos::Adp && next && next->pos == Pos::Num &&
                 approximators().count(t.lower)) {
        t.pos = Pos::Adv;  // "about two years"
      } else if (t.pos == Pos::Adp &&
                 (t.lower == "before" || t.lower == "after" || t.lower == "until" || t.lower == "as") &&
                 clause_follows(toks, i + 1)) {
        t.pos = Pos::Sconj;
      } else if (t.pos == Pos::Sconj && t.lower == "since" && !clause_follows(toks, i + 1)) {
        t.pos = Pos::Adp;
      } else if (t.pos == Pos::Det && pronominal_determiners().count(t.lower) &&
                 (!next || next->pos == Pos::Adp || next->pos == Pos::Punct || next->pos == Pos::Aux ||
                  (next->pos == Pos::Verb && !has_noun_reading(*next)))) {
        t.pos = Pos::Pron;  // "all of", "some are"
      } else if ((t.lower == "more" || t.lower == "most" || t.lower == "less" || t.lower == "least") && next) {
        t.pos = (next->pos == Pos::Noun || next->pos == Pos::Propn) ? Pos::Adj : Pos::Adv;
      } else if (t.pos == Pos::Aux && t.lower == "do" && next && next->pos == Pos::Det) {
        t.pos = Pos::Verb;
      } else if (t.verb && t.pos != Pos::Aux && t.pos != Pos::Adv && t.pos != Pos::Propn &&
                 !(t.pos == Pos::Adj && !english::verbs().count(t.lower) && t.verb->form == VerbForm::Base)) {
        t.pos = resolve_verbal(toks, i, prev, prev_core, next, verb_seen);
      } else if (t.pos == Pos::Adj && next && next->pos == Pos::Adj) {
        // keep
      }

      if (t.pos == Pos::Verb || (t.pos == Pos::Aux && !(next && (next->pos == Pos::Verb || next->verb))))
        verb_seen = true;
      if (t.pos == Pos::Aux) verb_seen = true;
      if (t.relative_pronoun || t.complementizer || t.pos == Pos::Sconj) verb_seen = false;
      if (t.pos == Pos::Cconj) {
        // a following verb may start a coordinated predicate
        verb_seen = false;
      }
      if (t.pos == Pos::Part && t.lower == "to") verb_seen = false;
    }
  }

  // An auxiliary or an unambiguous finite verb later in the same clause.
  static bool finite_verb_ahead(const std::vector<TaggedToken>& toks, std::size_t from) {
    for (std::size_t j = from; j < toks.size(); ++j) {
      const auto& t = toks[j];
      if (t.pos == Pos::Punct || t.pos == Pos::Sconj || t.pos == Pos::Cconj || t.relative_pronoun ||
          english::wh_words().count(t.lower))
        return false;
      if (t.pos == Pos::Aux) return true;
      if (t.verb && t.pos != Pos::Adj && (!has_noun_reading(t) || t.verb->form == VerbForm::Past)) return true;
    }
    return false;
  }

  Pos resolve_verbal(const std::vector<TaggedToken>& toks, std::size_t i, const TaggedToken* prev,
                     const TaggedToken* prev_core, const TaggedToken* next, bool verb_seen) const {
    const auto& t = toks[i];
    const VerbForm form = t.verb->form;
    const bool adj_reading = english::adjectives().count(t.lower) > 0;
    const bool noun_reading = has_noun_reading(t);
    auto next_is_nominal = [&] {
      return next && (next->pos == Pos::Noun || next->pos == Pos::Propn ||
                      (next->verb && has_noun_reading(*next) && next->pos != Pos::Aux &&
                       next->pos != Pos::Adv));
    };

    if (!prev_core) {
      // sentence-initial: imperative before an object, otherwise nominal
      if (form == VerbForm::Base && next && np_start(*next)) return Pos::Verb;
      if (form == VerbForm::Gerund) return Pos::Noun;
      return noun_reading ? Pos::Noun : (adj_reading ? Pos::Adj : Pos::Verb);
    }
    const Pos pc = prev_core->pos;
    if (prev_core->lower == "to" && prev_core->pos == Pos::Part) return Pos::Verb;
    if (pc == Pos::Aux) {
      if (adj_reading && english::is_be_form(english::auxiliaries().at(prev_core->lower)) &&
          form == VerbForm::Base)
        return Pos::Adj;
      return Pos::Verb;
    }
    if (pc == Pos::Det || prev_core->possessive_pronoun || pc == Pos::Num ||
        (pc == Pos::Adj && prev == prev_core) || pc == Pos::Adp) {
      if (pc == Pos::Adp && form == VerbForm::Gerund) return Pos::Verb;  // "by paying"
      if ((form == VerbForm::Past || form == VerbForm::Gerund) && next_is_nominal()) return Pos::Adj;
      if (adj_reading && next_is_nominal()) return Pos::Adj;
      return noun_reading || form == VerbForm::Past ? (form == VerbForm::Past ? Pos::Adj : Pos::Noun)
                                                     : Pos::Noun;
    }
    if (pc == Pos::Pron && !prev_core->possessive_pronoun) {
      if (subject_pronoun(*prev_core) || prev_core->relative_pronoun) return Pos::Verb;
      return noun_reading ? Pos::Noun : Pos::Verb;
    }
    if (pc == Pos::Cconj || pc == Pos::Sconj) {
      if (next && (np_start(*next) || next->pos == Pos::Adp)) return Pos::Verb;
      if (form == VerbForm::Past || form == VerbForm::ThirdSingular) return Pos::Verb;
      return noun_reading ? Pos::Noun : Pos::Verb;
    }
    if (pc == Pos::Noun || pc == Pos::Propn) {
      if (!verb_seen) {
        if (form == VerbForm::Past) return Pos::Verb;
        if (form == VerbForm::ThirdSingular)
          return !finite_verb_ahead(toks, i + 1) || (next && next->pos == Pos::Verb) ? Pos::Verb : Pos::Noun;
        if (form == VerbForm::Base) {
          bool plural_subject = prev_core->pos == Pos::Noun &&
                                noun_lemma(prev_core->lower) != prev_core->lower;
          if (plural_subject && !(next && next->pos == Pos::Aux)) return Pos::Verb;
          if (!noun_reading) return Pos::Verb;
          return Pos::Noun;
        }
        return Pos::Verb;  // gerund after noun: participial modifier
      }
      if (form == VerbForm::Past || form == VerbForm::Gerund) return Pos::Verb;
      return noun_reading ? Pos::Noun : Pos::Verb;
    }
    if (pc == Pos::Verb) {
      // "helps improve", "started paying"
      if (form == VerbForm::Base || form == VerbForm::Gerund)
        return next && np_start(*next) ? Pos::Verb : (noun_reading ? Pos::Noun : Pos::Verb);
      return noun_reading ? Pos::Noun : (adj_reading ? Pos::Adj : Pos::Verb);
    }
    if (pc == Pos::Adj) return noun_reading ? Pos::Noun : Pos::Verb;
    if (pc == Pos::Punct) {
      if (form == VerbForm::Base && next && np_start(*next)) return Pos::Verb;
      if (form == VerbForm::Gerund) return Pos::Verb;
      return noun_reading ? Pos::Noun : Pos::Verb;
    }
    return noun_reading && !verb_seen ? Pos::Noun : Pos::Verb;
  }

  static std::string lemma_for(const TaggedToken& t) {
    switch (t.pos) {
      case Pos::Noun: return noun_lemma(t.lower);
      case Pos::Propn: return t.text;
      case Pos::Verb: return verb_lemma(t.lower);
      case Pos::Aux: {
        auto it = english::auxiliaries().find(t.lower);
        return it != english::auxiliaries().end() ? it->second : verb_lemma(t.lower);
      }
      case Pos::Adj:
        if (t.verb && t.verb->form != VerbForm::Base) return t.lower;
        return t.lower;
      default: return t.lower;
    }
  }
};

}  // namespace espace::nlp
