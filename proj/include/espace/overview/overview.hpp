#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "espace/kg/graph.hpp"
#include "espace/nlp/embedder.hpp"
#include "espace/nlp/summarizer.hpp"
#include "espace/overview/archetype.hpp"
#include "espace/overview/pertinence.hpp"
#include "espace/overview/summary_tree.hpp"
#include "espace/taxonomy/forest.hpp"

namespace espace::overview {

inline constexpr int kOverviewSchemaVersion = 1;

struct OverviewConfig {
  double threshold = 0.55;
  std::size_t fanout = 3;
  std::size_t summary_budget = 500;
  std::size_t abstract_budget = 200;
  std::vector<ArchetypalQuestion> archetypes = default_archetypes();
};

struct Overview {
  std::string concept_uri;
  std::string label;
  std::vector<std::pair<std::string, SummaryNode>> archetypes;  // present archetypes, most specific first
  std::vector<std::string> superclasses;
  std::vector<std::string> subclasses;
  std::optional<std::string> taxonomy;  // root label of the concept's tree
  std::string abstract;

  friend bool operator==(const Overview&, const Overview&) = default;
};

/// Everything an overview is computed from.
struct OverviewInputs {
  const kg::KnowledgeGraph& graph;
  const taxonomy::Taxonomy& taxonomy;
  const nlp::Embedder& embedder;
  const nlp::Summarizer& summarizer;
  const OverviewConfig& config;
};

/// Keeps the best answer per source paragraph so a cluster never shows a paragraph twice.
inline std::vector<PertinentAnswer> distinct_contexts(const std::vector<PertinentAnswer>& answers) {
  std::vector<PertinentAnswer> out;
  std::set<std::size_t> seen;
  for (const auto& a : answers)
    if (seen.insert(a.context_paragraph_id).second) out.push_back(a);
  return out;
}

/// Throws Error(MissingConcept) for unknown uris.
inline Overview generate_overview(const OverviewInputs& in, std::string_view uri) {
  const auto& concept_ = in.graph.at(uri);
  Overview ov;
  ov.concept_uri = concept_.uri;
  ov.label = concept_.label;
  ov.superclasses = in.taxonomy.superclasses(uri);
  ov.subclasses = in.taxonomy.subclasses(uri);
  ov.taxonomy = in.taxonomy.tree_label(uri);

  auto candidates = gather_candidates(in.graph, uri, in.taxonomy);
  auto context_of = [&](std::size_t pid) -> const std::string& { return in.graph.corpus.paragraph(pid).text; };
  auto clusters = cluster_answers(candidates, in.embedder, in.config.threshold, in.config.archetypes, context_of);

  std::vector<const ArchetypalQuestion*> by_rank;
  for (const auto& a : in.config.archetypes) by_rank.push_back(&a);
  std::stable_sort(by_rank.begin(), by_rank.end(), [](auto* x, auto* y) { return x->rank < y->rank; });

  const PertinentAnswer* best = nullptr;
  for (auto* q : by_rank) {
    auto it = clusters.find(q->name);
    if (it == clusters.end() || it->second.empty()) continue;
    // answers are sorted, and earlier archetypes win score ties
    if (!best || it->second.front().score > best->score) best = &it->second.front();
    std::vector<SummaryNode> leaves;
    for (auto& a : distinct_contexts(it->second)) leaves.push_back({context_of(a.context_paragraph_id), {}, a});
    auto tree = build_summary_tree(std::move(leaves), in.summarizer, in.config.fanout, in.config.summary_budget);
    ov.archetypes.emplace_back(q->name, std::move(*tree));
  }
  if (best) {
    const auto& t = in.graph.triple(best->triple_id);
    ov.abstract = in.summarizer.summarize(in.graph.corpus.sentence(t.sentence_id).text, in.config.abstract_budget);
  }
  return ov;
}

inline nlohmann::ordered_json to_json(const SummaryNode& node) {
  nlohmann::ordered_json j;
  j["summary"] = node.summary;
  if (node.answer) {
    j["snippet"] = node.answer->snippet;
    j["score"] = node.answer->score;
    j["paragraph_id"] = node.answer->context_paragraph_id;
    j["triple_id"] = node.answer->triple_id;
    j["kind"] = std::string(to_string(node.answer->kind));
  }
  auto children = nlohmann::ordered_json::array();
  for (const auto& c : node.children) children.push_back(to_json(c));
  j["children"] = std::move(children);
  return j;
}

inline nlohmann::ordered_json to_json(const Overview& ov) {
  nlohmann::ordered_json j;
  j["schema_version"] = kOverviewSchemaVersion;
  j["concept_uri"] = ov.concept_uri;
  j["label"] = ov.label;
  j["abstract"] = ov.abstract;
  auto arch = nlohmann::ordered_json::object();
  for (const auto& [name, tree] : ov.archetypes) arch[name] = to_json(tree);
  j["archetypes"] = std::move(arch);
  j["superclasses"] = ov.superclasses;
  j["subclasses"] = ov.subclasses;
  j["taxonomy"] = ov.taxonomy ? nlohmann::ordered_json(*ov.taxonomy) : nlohmann::ordered_json(nullptr);
  return j;
}

/// Serialized overviews keyed by (uri, configuration hash). Concurrent readers; the first
/// writer of a key wins and later writers get the stored value.
class OverviewCache {
 public:
  std::optional<std::string> find(const std::string& uri, std::uint64_t config_hash) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find({uri, config_hash});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& insert(const std::string& uri, std::uint64_t config_hash, std::string body) {
    std::lock_guard lock(mu_);
    return entries_.try_emplace({uri, config_hash}, std::move(body)).first->second;
  }

  template <typename Make>
  std::string get_or_create(const std::string& uri, std::uint64_t config_hash, Make make) {
    if (auto hit = find(uri, config_hash)) return *hit;
    return insert(uri, config_hash, make());
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::string, std::uint64_t>, std::string> entries_;
};

}  // namespace espace::overview
