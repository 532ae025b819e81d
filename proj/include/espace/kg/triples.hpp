#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "espace/error.hpp"
#include "espace/kg/syntagm.hpp"
#include "espace/nlp/token.hpp"

namespace espace::kg {

inline constexpr std::string_view kSubj = "{subj}";
inline constexpr std::string_view kObj = "{obj}";

struct TemplateTriple {
  std::size_t id = 0;
  std::string subject_uri;
  std::string templ;  // predicate with one {subj} and one {obj}
  std::string object_uri;
  std::size_t sentence_id = 0;
  std::size_t paragraph_id = 0;
  // the phrases the placeholders replaced, as they appear in the sentence
  std::string subject_surface;
  std::string object_surface;

  friend bool operator==(const TemplateTriple&, const TemplateTriple&) = default;
};

inline std::size_t count_occurrences(std::string_view s, std::string_view needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string_view::npos; p = s.find(needle, p + needle.size())) ++n;
  return n;
}

inline bool well_formed_template(std::string_view templ) {
  return count_occurrences(templ, kSubj) == 1 && count_occurrences(templ, kObj) == 1;
}

/// Substitutes both placeholders in one pass; throws Error(Format) on a malformed template.
inline std::string realize_template(std::string_view templ, std::string_view subj, std::string_view obj) {
  if (!well_formed_template(templ)) throw Error(ErrorCode::Format, "template needs one {subj} and one {obj}");
  std::string out;
  std::size_t i = 0;
  while (i < templ.size()) {
    if (templ.substr(i, kSubj.size()) == kSubj) {
      out += subj;
      i += kSubj.size();
    } else if (templ.substr(i, kObj.size()) == kObj) {
      out += obj;
      i += kObj.size();
    } else {
      out += templ[i++];
    }
  }
  return out;
}

namespace detail {

inline bool subject_arc(std::string_view label) {
  return label == "nsubj" || label == "nsubjpass" || label == "csubj" || label == "csubjpass";
}

struct TemplatePiece {
  std::size_t begin = 0;  // byte offsets in the sentence
  std::size_t end = 0;
  std::string text;
};

inline std::string assemble(std::vector<TemplatePiece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.begin < b.begin; });
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool closer = pieces[i].text.size() == 1 && std::string_view(".,;:!?)]").find(pieces[i].text[0]) != std::string_view::npos;
    if (i > 0 && pieces[i].begin > pieces[i - 1].end && !closer) out += ' ';
    out += pieces[i].text;
  }
  return out;
}

}  // namespace detail

/// One triple per pair of syntagms with distinct uris. The template keeps, in sentence
/// order, the tokens on the dependency path between the two heads, the whole phrase of
/// any other syntagm the path crosses, the concept-free dependent subtrees of interior
/// path nodes, and case markers of the endpoints. Triple ids are left at 0.
inline std::vector<TemplateTriple> extract_template_triples(const nlp::Sentence& s,
                                                            const std::vector<Syntagm>& syntagms,
                                                            std::size_t sentence_id = 0,
                                                            std::size_t paragraph_id = 0) {
  std::vector<TemplateTriple> out;
  if (syntagms.size() < 2) return out;
  const std::size_t n = s.size();
  auto kids = nlp::children_of(s);

  std::vector<int> owner(n, -1);  // syntagm index owning each token
  for (std::size_t i = 0; i < syntagms.size(); ++i)
    for (std::size_t k = syntagms[i].begin; k < syntagms[i].end; ++k) owner[k] = static_cast<int>(i);

  // whether a subtree holds any syntagm token; children always have a larger depth
  std::vector<bool> has_concept(n, false);
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t i = 0; i < n; ++i) depth[i] = nlp::ancestors(s, i).size();
  std::vector<std::size_t> by_depth(n);
  for (std::size_t i = 0; i < n; ++i) by_depth[i] = i;
  std::sort(by_depth.begin(), by_depth.end(), [&](auto a, auto b) { return depth[a] > depth[b]; });
  for (auto i : by_depth) {
    if (owner[i] >= 0) has_concept[i] = true;
    if (has_concept[i] && !s[i].is_root()) has_concept[s[i].head_index] = true;
  }

  auto add_subtree = [&](std::size_t root, std::vector<bool>& keep) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      auto k = stack.back();
      stack.pop_back();
      keep[k] = true;
      for (auto c : kids[k]) stack.push_back(c);
    }
  };

  for (std::size_t a = 0; a < syntagms.size(); ++a) {
    for (std::size_t b = a + 1; b < syntagms.size(); ++b) {
      const auto& A = syntagms[a];
      const auto& B = syntagms[b];
      if (A.uri == B.uri) continue;
      auto up_a = nlp::ancestors(s, A.head);
      auto up_b = nlp::ancestors(s, B.head);
      std::size_t lca = n;
      for (auto x : up_a)
        if (std::find(up_b.begin(), up_b.end(), x) != up_b.end()) {
          lca = x;
          break;
        }
      std::vector<std::size_t> path;
      bool a_subject = false, b_subject = false;
      for (auto x : up_a) {
        path.push_back(x);
        if (x == lca) break;
        a_subject = a_subject || detail::subject_arc(s[x].dep_label);
      }
      for (auto x : up_b) {
        if (x == lca) break;
        path.push_back(x);
        b_subject = b_subject || detail::subject_arc(s[x].dep_label);
      }

      std::vector<bool> keep(n, false);
      std::vector<bool> on_path(n, false);
      for (auto x : path) on_path[x] = true;
      for (auto x : path) {
        if (x == A.head || x == B.head) continue;
        keep[x] = true;
        if (owner[x] >= 0)
          for (std::size_t k = syntagms[owner[x]].begin; k < syntagms[owner[x]].end; ++k) keep[k] = true;
        for (auto c : kids[x])
          if (!on_path[c] && !has_concept[c]) add_subtree(c, keep);
      }
      for (const auto* endpoint : {&A, &B})
        for (auto c : kids[endpoint->head])
          if (s[c].dep_label == "case" && !endpoint->contains(c) && !has_concept[c]) keep[c] = true;

      bool a_is_subj = a_subject != b_subject ? a_subject : A.begin < B.begin;
      const Syntagm& subj = a_is_subj ? A : B;
      const Syntagm& obj = a_is_subj ? B : A;

      std::vector<detail::TemplatePiece> pieces;
      bool clash = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (!keep[k] || A.contains(k) || B.contains(k)) continue;
        if (s[k].text.find('{') != std::string::npos) clash = true;
        pieces.push_back({s[k].offset, s[k].end(), s[k].text});
      }
      if (clash) continue;
      pieces.push_back({s[subj.begin].offset, s[subj.end - 1].end(), std::string(kSubj)});
      pieces.push_back({s[obj.begin].offset, s[obj.end - 1].end(), std::string(kObj)});

      TemplateTriple t;
      t.subject_uri = subj.uri;
      t.object_uri = obj.uri;
      t.templ = detail::assemble(std::move(pieces));
      t.sentence_id = sentence_id;
      t.paragraph_id = paragraph_id;
      t.subject_surface = subj.surface;
      t.object_surface = obj.surface;
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace espace::kg
