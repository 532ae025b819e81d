#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "espace/error.hpp"
#include "espace/nlp/tagger.hpp"
#include "espace/nlp/token.hpp"
#include "espace/nlp/tokenizer.hpp"

namespace espace::nlp {

/// Dependency parser port.
class DependencyParser {
 public:
  virtual ~DependencyParser() = default;
  virtual std::string name() const = 0;
  virtual std::vector<CharSpan> split_sentences(std::string_view paragraph) const = 0;
  /// Throws Error(EmptyInput) when `sentence` is blank.
  virtual Sentence parse(std::string_view sentence) const = 0;
};

namespace detail {

enum class UnitKind { Noun, Verb, Adj, Single };

struct Unit {
  UnitKind kind = UnitKind::Single;
  std::size_t begin = 0, end = 0;  // token range
  std::size_t head = 0;
};

enum class SegKind { Plain, Subordinate, Complement, Relative, Infinitive, Coordinate };

struct Segment {
  SegKind kind = SegKind::Plain;
  std::vector<std::size_t> units;  // indices into unit list
  std::optional<std::size_t> intro;  // introducing unit (SCONJ, CCONJ, wh-word)
  std::size_t head = 0;
  bool has_verb = false;
  std::optional<std::size_t> merged_into;
};

class TreeBuilder {
 public:
  explicit TreeBuilder(std::vector<TaggedToken> toks)
      : t_(std::move(toks)), head_(t_.size(), kUnset), label_(t_.size()) {}

  Sentence build() {
    chunk();
    segment();
    for (auto& s : segs_) attach_inside(s);
    attach_segments();
    finish();
    Sentence out;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      out.push_back(ParsedToken{i, t_[i].text, t_[i].lemma, t_[i].pos, label_[i], head_[i], t_[i].offset});
    }
    return out;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  std::vector<TaggedToken> t_;
  std::vector<std::size_t> head_;
  std::vector<std::string> label_;
  std::vector<Unit> units_;
  std::vector<Segment> segs_;
  std::size_t root_ = 0;

  void link(std::size_t child, std::size_t head, std::string label) {
    if (child == head) return;
    head_[child] = head;
    label_[child] = std::move(label);
  }

  bool nominal_member(std::size_t i) const {
    const auto& t = t_[i];
    return t.pos == Pos::Det || t.possessive_pronoun || t.pos == Pos::Adj || t.pos == Pos::Num ||
           t.pos == Pos::Noun || t.pos == Pos::Propn;
  }

  // ---- chunking ----------------------------------------------------------

  void chunk() {
    const std::size_t n = t_.size();
    std::size_t i = 0;
    while (i < n) {
      if (auto np = noun_phrase_at(i)) {
        units_.push_back(*np);
        i = np->end;
        continue;
      }
      if (auto vg = verb_group_at(i)) {
        units_.push_back(*vg);
        i = vg->end;
        continue;
      }
      if (auto ap = adjective_phrase_at(i)) {
        units_.push_back(*ap);
        i = ap->end;
        continue;
      }
      units_.push_back(Unit{UnitKind::Single, i, i + 1, i});
      ++i;
    }
    merge_possessives();
  }

  std::optional<Unit> noun_phrase_at(std::size_t i) const {
    const std::size_t n = t_.size();
    const auto& first = t_[i];
    if (first.pos == Pos::Pron && !first.possessive_pronoun) {
      if (first.relative_pronoun || first.lower == "what" || first.lower == "which" ||
          first.lower == "who" || first.lower == "whom")
        return std::nullopt;
      Unit u{UnitKind::Noun, i, i + 1, i};
      if (i + 1 < n && t_[i + 1].lower == "else") u.end = i + 2;
      return u;
    }
    auto adverb_lead = [&](std::size_t k) {
      return t_[k].pos == Pos::Adv && k + 1 < n && (t_[k + 1].pos == Pos::Adj || t_[k + 1].pos == Pos::Num);
    };
    if (!nominal_member(i) && !adverb_lead(i)) return std::nullopt;
    std::size_t j = i;
    std::optional<std::size_t> last_nominal;
    while (j < n) {
      const auto& t = t_[j];
      bool determiner_like = t.pos == Pos::Det || t.possessive_pronoun;
      if (determiner_like && j > i) break;
      if (nominal_member(j)) {
        if (is_nominal(t.pos) || (t.pos == Pos::Num && !last_nominal)) last_nominal = j;
        ++j;
        continue;
      }
      if (adverb_lead(j)) {
        ++j;
        continue;
      }
      break;
    }
    if (!last_nominal) {
      // lone determiner or number acting as a pronoun
      if (j == i + 1 && (first.pos == Pos::Num || first.pos == Pos::Det)) return Unit{UnitKind::Noun, i, i + 1, i};
      return std::nullopt;
    }
    return Unit{UnitKind::Noun, i, *last_nominal + 1, *last_nominal};
  }

  std::optional<Unit> verb_group_at(std::size_t i) const {
    const std::size_t n = t_.size();
    auto verbal = [&](std::size_t k) { return t_[k].pos == Pos::Verb || t_[k].pos == Pos::Aux; };
    auto modifier = [&](std::size_t k) {
      return t_[k].pos == Pos::Adv || (t_[k].pos == Pos::Part && t_[k].lower != "'s");
    };
    // find the first verbal token after optional modifiers
    std::size_t k = i;
    while (k < n && modifier(k)) ++k;
    if (k >= n || !verbal(k)) return std::nullopt;
    if (k > i && t_[i].pos == Pos::Adv && t_[i].lower != "not") {
      // leading adverbs stay outside unless directly before the verb group
    }
    std::size_t j = k;
    std::optional<std::size_t> head;
    std::size_t last_aux = k;
    while (j < n) {
      if (t_[j].pos == Pos::Verb) {
        head = j;
        ++j;
        if (j < n && t_[j].pos == Pos::Adp && (t_[j].lower == "up" || t_[j].lower == "out" || t_[j].lower == "off") &&
            (j + 1 >= n || t_[j + 1].pos == Pos::Det || t_[j + 1].pos == Pos::Punct)) {
          ++j;  // particle
        }
        break;
      }
      if (t_[j].pos == Pos::Aux) {
        last_aux = j;
        ++j;
        continue;
      }
      if (modifier(j)) {
        std::size_t m = j;
        while (m < n && modifier(m)) ++m;
        if (m < n && verbal(m)) {
          j = m;
          continue;
        }
      }
      break;
    }
    // trailing adverbs before an adjective belong to the adjective phrase
    std::size_t end = j;
    if (!head) {
      head = last_aux;
      end = last_aux + 1;
    }
    return Unit{UnitKind::Verb, i, end, *head};
  }

  std::optional<Unit> adjective_phrase_at(std::size_t i) const {
    const std::size_t n = t_.size();
    std::size_t j = i;
    while (j < n && t_[j].pos == Pos::Adv) ++j;
    if (j >= n || t_[j].pos != Pos::Adj) return std::nullopt;
    return Unit{UnitKind::Adj, i, j + 1, j};
  }

  void merge_possessives() {
    std::vector<Unit> out;
    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (units_[u].kind == UnitKind::Noun && u + 2 < units_.size() &&
          units_[u + 1].kind == UnitKind::Single && t_[units_[u + 1].head].pos == Pos::Part &&
          (t_[units_[u + 1].head].lower == "'s" || t_[units_[u + 1].head].lower == "'" ||
           t_[units_[u + 1].head].lower == "\xE2\x80\x99s") &&
          units_[u + 2].kind == UnitKind::Noun) {
        // possessor: attach now, the merged unit is headed by the possessed noun
        Unit possessor = units_[u];
        attach_noun_internals(possessor);
        link(possessor.head, units_[u + 2].head, "poss");
        link(units_[u + 1].head, possessor.head, "case");
        Unit merged = units_[u + 2];
        merged.begin = possessor.begin;
        merged_possessor_.push_back({merged.head, possessor.end + 1});
        out.push_back(merged);
        u += 2;
        continue;
      }
      out.push_back(units_[u]);
    }
    units_ = std::move(out);
  }
  std::vector<std::pair<std::size_t, std::size_t>> merged_possessor_;  // (head, start of possessed part)

  void attach_noun_internals(const Unit& u) {
    std::size_t start = u.begin;
    for (auto& [h, s] : merged_possessor_)
      if (h == u.head) start = s;
    for (std::size_t k = start; k < u.end; ++k) {
      if (k == u.head || head_[k] != kUnset) continue;
      const auto& t = t_[k];
      if (t.pos == Pos::Det) link(k, u.head, "det");
      else if (t.possessive_pronoun) link(k, u.head, "poss");
      else if (t.pos == Pos::Adj) link(k, u.head, "amod");
      else if (t.pos == Pos::Num) link(k, u.head, "nummod");
      else if (is_nominal(t.pos)) link(k, u.head, "compound");
      else if (t.pos == Pos::Adv) {
        std::size_t target = k + 1 < u.end ? k + 1 : u.head;
        while (target + 1 < u.end && t_[target].pos == Pos::Adv) ++target;
        link(k, target, t.lower == "else" ? "advmod" : "advmod");
      } else link(k, u.head, "dep");
    }
  }

  void attach_unit_internals(const Unit& u) {
    if (u.kind == UnitKind::Noun) return attach_noun_internals(u);
    if (u.kind == UnitKind::Adj) {
      for (std::size_t k = u.begin; k < u.end; ++k)
        if (k != u.head) link(k, u.head, "advmod");
      return;
    }
    if (u.kind == UnitKind::Verb) {
      bool passive = t_[u.head].pos == Pos::Verb && verb_form_of(t_[u.head]) == VerbForm::Past;
      std::optional<std::size_t> last_aux;
      for (std::size_t k = u.begin; k < u.end; ++k)
        if (t_[k].pos == Pos::Aux && k < u.head) last_aux = k;
      for (std::size_t k = u.begin; k < u.end; ++k) {
        if (k == u.head) continue;
        const auto& t = t_[k];
        if (t.pos == Pos::Aux) {
          bool be = t.lemma == "be";
          link(k, u.head, passive && be && last_aux == k ? "auxpass" : "aux");
        } else if (t.pos == Pos::Part && t.lower == "to") {
          link(k, u.head, "aux");
        } else if (t.pos == Pos::Part) {
          link(k, u.head, "neg");
        } else if (t.pos == Pos::Adp) {
          link(k, u.head, "prt");
        } else {
          link(k, u.head, "advmod");
        }
      }
    }
  }

  static VerbForm verb_form_of(const TaggedToken& t) { return detail::verb_form_of(t); }

  // ---- clause segmentation ----------------------------------------------

  const TaggedToken& head_tok(std::size_t unit) const { return t_[units_[unit].head]; }

  bool unit_is(std::size_t u, Pos p) const {
    return units_[u].kind == UnitKind::Single && t_[units_[u].head].pos == p;
  }

  bool verb_ahead(std::size_t from, bool stop_at_comma) const {
    for (std::size_t u = from; u < units_.size(); ++u) {
      if (units_[u].kind == UnitKind::Verb) return true;
      if (stop_at_comma && unit_is(u, Pos::Punct)) return false;
      if (unit_is(u, Pos::Sconj)) return false;
    }
    return false;
  }

  void segment() {
    Segment cur;
    auto flush = [&] {
      if (!cur.units.empty()) segs_.push_back(cur);
      cur = Segment{};
    };
    for (std::size_t u = 0; u < units_.size(); ++u) {
      const Unit& unit = units_[u];
      const TaggedToken& h = t_[unit.head];
      bool starts = false;
      SegKind kind = SegKind::Plain;
      if (unit.kind == UnitKind::Single) {
        if (h.pos == Pos::Sconj) {
          starts = true;
          kind = h.complementizer ? SegKind::Complement : SegKind::Subordinate;
        } else if (h.relative_pronoun) {
          starts = true;
          kind = SegKind::Relative;
        } else if (h.pos == Pos::Adv && (h.lower == "when" || h.lower == "where" || h.lower == "why" ||
                                         h.lower == "how") && u > 0 && verb_ahead(u + 1, true)) {
          starts = true;
          kind = SegKind::Subordinate;
        } else if (h.pos == Pos::Pron && (h.lower == "what" || h.lower == "which" || h.lower == "who") &&
                   u > 0 && verb_ahead(u + 1, true)) {
          starts = true;
          kind = SegKind::Complement;
        } else if (h.pos == Pos::Cconj && cur.has_verb && u + 1 < units_.size() &&
                   (units_[u + 1].kind == UnitKind::Verb ||
                    (units_[u + 1].kind == UnitKind::Noun && u + 2 < units_.size() &&
                     units_[u + 2].kind == UnitKind::Verb))) {
          starts = true;
          kind = SegKind::Coordinate;
        }
      } else if (unit.kind == UnitKind::Verb && t_[unit.begin].pos == Pos::Part &&
                 t_[unit.begin].lower == "to") {
        starts = true;
        kind = SegKind::Infinitive;
      }
      if (starts && kind == SegKind::Infinitive && cur.units.size() == 1 && cur.intro) {
        starts = false;  // "whether to approve"
      }
      if (starts) {
        flush();
        cur.kind = kind;
        cur.units.push_back(u);
        if (unit.kind == UnitKind::Single) cur.intro = u;
        if (unit.kind == UnitKind::Verb) cur.has_verb = true;
        continue;
      }
      cur.units.push_back(u);
      if (unit.kind == UnitKind::Verb) {
        if (cur.has_verb && cur.kind != SegKind::Plain) {
          // a second verb group inside a subordinate segment often opens the main clause:
          // "If you miss a payment your score drops"
        }
        cur.has_verb = true;
      }
      if (unit.kind == UnitKind::Single && (h.text == "," || h.text == ";" || h.text == ":") &&
          cur.has_verb && verb_ahead(u + 1, true)) {
        flush();
      }
    }
    flush();
    // verbless plain segment followed by a subject-less plain segment: same clause
    for (std::size_t s = 0; s < segs_.size(); ++s) {
      if (segs_[s].kind != SegKind::Plain || segs_[s].has_verb) continue;
      for (std::size_t r = s + 1; r < segs_.size(); ++r) {
        if (segs_[r].kind == SegKind::Relative || segs_[r].kind == SegKind::Subordinate) continue;
        if (segs_[r].kind == SegKind::Plain && segs_[r].has_verb && !segs_[r].units.empty() &&
            units_[segs_[r].units.front()].kind == UnitKind::Verb) {
          auto& target = segs_[r];
          target.units.insert(target.units.begin(), segs_[s].units.begin(), segs_[s].units.end());
          segs_[s].merged_into = r;
        }
        break;
      }
    }
  }

  // ---- attachment within a clause ---------------------------------------

  void attach_inside(Segment& s) {
    if (s.merged_into) return;
    for (auto u : s.units) attach_unit_internals(units_[u]);
    // clause head
    std::optional<std::size_t> verb_unit;
    for (auto u : s.units)
      if (units_[u].kind == UnitKind::Verb) {
        verb_unit = u;
        break;
      }
    std::size_t head;
    if (verb_unit) {
      head = units_[*verb_unit].head;
    } else {
      std::optional<std::size_t> pick;
      for (auto u : s.units)
        if (units_[u].kind == UnitKind::Noun || units_[u].kind == UnitKind::Adj) {
          pick = units_[u].head;
          break;
        }
      if (!pick)
        for (auto u : s.units)
          if (!(s.intro && *s.intro == u) && !unit_is(u, Pos::Punct)) {
            pick = units_[u].head;
            break;
          }
      head = pick ? *pick : units_[s.units.front()].head;
    }
    s.head = head;
    const bool passive = verb_unit && [&] {
      for (std::size_t k = units_[*verb_unit].begin; k < units_[*verb_unit].end; ++k)
        if (label_[k] == "auxpass") return true;
      return false;
    }();
    const bool copula = verb_unit && t_[head].pos == Pos::Aux;

    std::optional<std::size_t> subject_unit, last_noun_unit, pending_adp, object_unit, last_content;
    std::optional<std::size_t> coord_left;  // noun unit awaiting a conjunct
    std::optional<std::size_t> pending_cc;
    bool after_verb = false;

    for (std::size_t idx = 0; idx < s.units.size(); ++idx) {
      std::size_t u = s.units[idx];
      const Unit& unit = units_[u];
      std::size_t h = unit.head;
      if (s.intro && *s.intro == u) {
        const auto& tok = t_[h];
        if (tok.pos == Pos::Sconj) link(h, head, "mark");
        else if (tok.pos == Pos::Cconj) link(h, head, "cc");
        else if (tok.pos == Pos::Adv) link(h, head, "advmod");
        // relative / wh pronouns resolved below
        continue;
      }
      if (verb_unit && u == *verb_unit) {
        after_verb = true;
        pending_adp.reset();
        last_content = u;
        continue;
      }
      switch (unit.kind) {
        case UnitKind::Noun: {
          if (pending_cc && coord_left) {
            link(h, units_[*coord_left].head, "conj");
            link(*pending_cc, units_[*coord_left].head, "cc");
            pending_cc.reset();
            last_noun_unit = u;
            last_content = u;
            break;
          }
          if (pending_adp) {
            link(h, *pending_adp, "pobj");
            pending_adp.reset();
          } else if (!after_verb) {
            if (subject_unit && verb_unit) {
              // earlier bare noun phrase becomes an adverbial ("Yesterday the bank ...")
              link(units_[*subject_unit].head, head, "npadvmod");
            }
            subject_unit = u;
          } else if (h != head) {
            if (!object_unit) {
              link(h, head, copula ? "attr" : "dobj");
              object_unit = u;
            } else if (last_content && *last_content == *object_unit) {
              link(h, head, "dobj");
              link(units_[*object_unit].head, head, "dative");
              object_unit = u;
            } else {
              link(h, head, "npadvmod");
            }
          }
          coord_left = u;
          last_noun_unit = u;
          last_content = u;
          break;
        }
        case UnitKind::Adj: {
          if (pending_cc && last_content && units_[*last_content].kind == UnitKind::Adj) {
            link(h, units_[*last_content].head, "conj");
            link(*pending_cc, units_[*last_content].head, "cc");
            pending_cc.reset();
          } else if (pending_adp) {
            link(h, *pending_adp, "pobj");
            pending_adp.reset();
          } else if (h != head) {
            link(h, head, after_verb ? "acomp" : "amod");
          }
          last_content = u;
          break;
        }
        case UnitKind::Verb: {
          // second verb group in the clause
          if (pending_adp) {
            link(h, *pending_adp, "pcomp");
            pending_adp.reset();
          } else if (pending_cc && h != head) {
            link(h, head, "conj");
            link(*pending_cc, head, "cc");
            pending_cc.reset();
          } else if (last_content && units_[*last_content].kind == UnitKind::Noun &&
                     units_[*last_content].head != head) {
            link(h, units_[*last_content].head, "acl");
          } else if (h != head) {
            link(h, head, "xcomp");
          }
          last_content = u;
          break;
        }
        case UnitKind::Single: {
          const auto& tok = t_[h];
          if (tok.pos == Pos::Adp) {
            std::size_t gov = head;
            if (last_content) {
              const Unit& lc = units_[*last_content];
              if (lc.kind == UnitKind::Noun && (tok.lower == "of" || !after_verb || !verb_unit))
                gov = lc.head;
              else if (lc.kind == UnitKind::Adj && lc.head != head)
                gov = lc.head;
              else if (lc.kind == UnitKind::Verb && lc.head != head)
                gov = lc.head;
            }
            if (pending_adp) gov = head;
            link(h, gov, "prep");
            pending_adp = h;
            last_content = u;
          } else if (tok.pos == Pos::Cconj) {
            pending_cc = h;
          } else if (tok.pos == Pos::Punct) {
            link(h, head, "punct");
          } else if (tok.pos == Pos::Adv || tok.pos == Pos::Part) {
            link(h, head, tok.pos == Pos::Part && tok.lower != "to" ? "neg" : "advmod");
          } else if (tok.pos == Pos::Pron) {
            if (!after_verb && !subject_unit) link(h, head, "nsubj");
            else link(h, head, object_unit ? "dep" : "dobj");
          } else if (tok.pos == Pos::Det) {
            link(h, head, "det");
          } else {
            if (pending_adp) {
              link(h, *pending_adp, "pobj");
              pending_adp.reset();
            } else {
              link(h, head, "dep");
            }
          }
          break;
        }
      }
    }
    if (pending_cc) link(*pending_cc, head, "cc");
    if (subject_unit && units_[*subject_unit].head != head) {
      if (verb_unit) link(units_[*subject_unit].head, head, passive ? "nsubjpass" : "nsubj");
    } else if (!subject_unit && s.intro && t_[units_[*s.intro].head].pos == Pos::Pron) {
      link(units_[*s.intro].head, head, passive ? "nsubjpass" : "nsubj");
    }
    if (s.intro && t_[units_[*s.intro].head].pos == Pos::Pron && head_[units_[*s.intro].head] == kUnset)
      link(units_[*s.intro].head, head, "dobj");
  }

  // ---- clause attachment -------------------------------------------------

  std::optional<std::size_t> antecedent(const Segment& s) const {
    std::size_t first = s.units.front();
    for (std::size_t u = first; u-- > 0;) {
      if (units_[u].kind == UnitKind::Noun) return units_[u].head;
      if (!unit_is(u, Pos::Punct)) break;
    }
    return std::nullopt;
  }

  void attach_segments() {
    std::optional<std::size_t> root_seg;
    for (std::size_t s = 0; s < segs_.size(); ++s)
      if (!segs_[s].merged_into && segs_[s].kind == SegKind::Plain && segs_[s].has_verb) {
        root_seg = s;
        break;
      }
    if (!root_seg)
      for (std::size_t s = 0; s < segs_.size(); ++s)
        if (!segs_[s].merged_into && segs_[s].has_verb) {
          root_seg = s;
          break;
        }
    if (!root_seg)
      for (std::size_t s = 0; s < segs_.size(); ++s)
        if (!segs_[s].merged_into) {
          root_seg = s;
          break;
        }
    root_ = segs_[*root_seg].head;
    head_[root_] = root_;
    label_[root_] = "ROOT";

    auto previous_head = [&](std::size_t s) -> std::size_t {
      for (std::size_t p = s; p-- > 0;)
        if (!segs_[p].merged_into) return segs_[p].head;
      return root_;
    };
    for (std::size_t s = 0; s < segs_.size(); ++s) {
      if (s == *root_seg || segs_[s].merged_into) continue;
      const Segment& seg = segs_[s];
      std::size_t h = seg.head;
      switch (seg.kind) {
        case SegKind::Subordinate:
          link(h, s < *root_seg ? root_ : previous_head(s), "advcl");
          break;
        case SegKind::Complement:
          link(h, previous_head(s), "ccomp");
          break;
        case SegKind::Relative:
          if (auto a = antecedent(seg)) link(h, *a, "relcl");
          else link(h, previous_head(s), "relcl");
          break;
        case SegKind::Infinitive: {
          std::size_t first = seg.units.front();
          if (first > 0 && units_[first - 1].kind == UnitKind::Noun &&
              label_[units_[first - 1].head] != "dobj")
            link(h, units_[first - 1].head, "acl");
          else
            link(h, previous_head(s), first > 0 && units_[first - 1].kind == UnitKind::Verb ? "xcomp" : "advcl");
          break;
        }
        case SegKind::Coordinate:
          link(h, previous_head(s), "conj");
          break;
        case SegKind::Plain:
          link(h, s < *root_seg ? root_ : previous_head(s), "parataxis");
          break;
      }
    }
  }

  void finish() {
    const std::size_t n = t_.size();
    // anything left unattached hangs off the root
    for (std::size_t i = 0; i < n; ++i)
      if (head_[i] == kUnset) {
        head_[i] = root_;
        label_[i] = t_[i].pos == Pos::Punct ? "punct" : "dep";
      }
    head_[root_] = root_;
    if (n > 1 && t_[n - 1].pos == Pos::Punct && n - 1 != root_) link(n - 1, root_, "punct");
    // break any cycle by re-attaching to the root
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<char> seen(n, 0);
      std::size_t cur = i;
      while (head_[cur] != cur) {
        if (seen[cur]) {
          link(cur, root_, "dep");
          break;
        }
        seen[cur] = 1;
        cur = head_[cur];
      }
    }
  }
};

}  // namespace detail

/// Reference parser: rule-based tagging, chunking and clause attachment.
class RuleBasedParser final : public DependencyParser {
 public:
  std::string name() const override { return "reference"; }

  std::vector<CharSpan> split_sentences(std::string_view paragraph) const override {
    return nlp::split_sentences(paragraph);
  }

  Sentence parse(std::string_view sentence) const override {
    if (text::trim(sentence).empty()) throw Error(ErrorCode::EmptyInput, "cannot parse an empty sentence");
    auto raw = tokenize(sentence);
    return detail::TreeBuilder(tagger_.tag(raw)).build();
  }

 private:
  Tagger tagger_;
};

}  // namespace espace::nlp
