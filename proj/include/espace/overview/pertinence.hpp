#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "espace/error.hpp"
#include "espace/kg/graph.hpp"
#include "espace/nlp/embedder.hpp"
#include "espace/overview/archetype.hpp"
#include "espace/taxonomy/forest.hpp"

namespace espace::overview {

enum class SnippetKind { Triple, Subject, Object };

inline std::string_view to_string(SnippetKind k) {
  switch (k) {
    case SnippetKind::Triple: return "triple";
    case SnippetKind::Subject: return "subject";
    case SnippetKind::Object: return "object";
  }
  return "triple";
}

struct Candidate {
  std::string snippet;
  std::size_t context_paragraph_id = 0;
  std::size_t triple_id = 0;
  SnippetKind kind = SnippetKind::Triple;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct PertinentAnswer {
  std::string snippet;
  std::size_t context_paragraph_id = 0;
  double score = 0.0;
  std::size_t triple_id = 0;
  SnippetKind kind = SnippetKind::Triple;

  friend bool operator==(const PertinentAnswer&, const PertinentAnswer&) = default;
};

/// Archetype name -> answers, best first.
using Clusters = std::map<std::string, std::vector<PertinentAnswer>>;

/// Realized triples touching the concept or any of its subclasses, each followed by its
/// subject and object phrases; the first copy of each (snippet, paragraph) pair is kept.
inline std::vector<Candidate> gather_candidates(const kg::KnowledgeGraph& graph, std::string_view uri,
                                                const taxonomy::Taxonomy& tax) {
  auto members = tax.subtree(uri);  // throws for unknown uris
  std::set<std::string> scope(members.begin(), members.end());
  std::vector<Candidate> out;
  std::set<std::pair<std::string, std::size_t>> seen;
  auto add = [&](std::string snippet, const kg::TemplateTriple& t, SnippetKind kind) {
    if (text::trim(snippet).empty()) return;
    if (!seen.emplace(snippet, t.paragraph_id).second) return;
    out.push_back({std::move(snippet), t.paragraph_id, t.id, kind});
  };
  for (const auto& t : graph.triples) {
    if (!scope.count(t.subject_uri) && !scope.count(t.object_uri)) continue;
    add(kg::realize_triple(t, graph), t, SnippetKind::Triple);
    add(t.subject_surface, t, SnippetKind::Subject);
    add(t.object_surface, t, SnippetKind::Object);
  }
  return out;
}

inline double score_pertinence(const ArchetypalQuestion& q, std::string_view snippet, std::string_view context,
                               const nlp::Embedder& embedder) {
  return nlp::inner_product(embedder.embed_question(q.question_text), embedder.embed_answer(snippet, context));
}

/// Scores every candidate against every archetype and gives it to the most specific
/// archetype scoring at least `threshold`. Within an archetype answers are sorted by
/// decreasing score, ties by triple id, then by candidate order.
/// `context_of` maps a paragraph id to its text.
template <typename ContextFn>
Clusters cluster_answers(const std::vector<Candidate>& candidates, const nlp::Embedder& embedder,
                         double threshold, const std::vector<ArchetypalQuestion>& archetypes, ContextFn context_of) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw Error(ErrorCode::Configuration, "pertinence threshold must lie in [0, 1]");
  std::vector<const ArchetypalQuestion*> by_rank;
  for (const auto& a : archetypes) by_rank.push_back(&a);
  std::stable_sort(by_rank.begin(), by_rank.end(), [](auto* x, auto* y) { return x->rank < y->rank; });
  std::vector<nlp::EmbeddingVector> questions;
  for (auto* a : by_rank) questions.push_back(embedder.embed_question(a->question_text));

  Clusters clusters;
  for (const auto& c : candidates) {
    auto answer = embedder.embed_answer(c.snippet, context_of(c.context_paragraph_id));
    for (std::size_t i = 0; i < by_rank.size(); ++i) {
      double score = nlp::inner_product(questions[i], answer);
      if (score >= threshold) {
        clusters[by_rank[i]->name].push_back({c.snippet, c.context_paragraph_id, score, c.triple_id, c.kind});
        break;
      }
    }
  }
  for (auto& [name, answers] : clusters)
    std::stable_sort(answers.begin(), answers.end(), [](const auto& a, const auto& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.triple_id < b.triple_id;
    });
  return clusters;
}

}  // namespace espace::overview
