#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "espace/annotate/annotator.hpp"
#include "espace/error.hpp"
#include "espace/nlp/embedder.hpp"
#include "espace/nlp/summarizer.hpp"
#include "espace/overview/overview.hpp"
#include "espace/service/external_embedder.hpp"
#include "espace/service/snapshot.hpp"
#include "espace/taxonomy/forest.hpp"

namespace espace::service {

inline std::shared_ptr<const nlp::Embedder> make_embedder(const PipelineConfig& c) {
  if (c.embedder == "external")
    return std::make_shared<nlp::CachingEmbedder>(std::make_shared<ExternalHttpEmbedder>(c.embedder_url, c.embedding_dimension));
  return std::make_shared<nlp::CachingEmbedder>(
      std::make_shared<nlp::HashingEmbedder>(nlp::HashingEmbedderOptions{c.embedding_dimension, c.context_weight, 1.0}));
}

/// Read-only query side of one snapshot. Safe to share across threads; only the
/// overview and embedding caches mutate, under their own locks.
class Engine {
 public:
  explicit Engine(Snapshot snap)
      : Engine(std::make_shared<const Snapshot>(std::move(snap))) {}

  explicit Engine(std::shared_ptr<const Snapshot> snap)
      : snap_(std::move(snap)),
        taxonomy_(snap_->graph, snap_->forest),
        matcher_(snap_->graph),
        embedder_(make_embedder(snap_->config)),
        overview_config_(snap_->config.overview_config()) {}

  const Snapshot& snapshot() const { return *snap_; }
  const taxonomy::Taxonomy& taxonomy() const { return taxonomy_; }

  overview::Overview overview(std::string_view uri) const {
    return overview::generate_overview({snap_->graph, taxonomy_, *embedder_, summarizer_, overview_config_}, uri);
  }

  /// Serialized overview, generated once per (uri, config). Throws Error(MissingConcept).
  std::string overview_json(std::string_view uri) const {
    std::string key(uri);
    if (!snap_->graph.contains(key)) throw Error(ErrorCode::MissingConcept, "unknown concept " + key);
    return cache_.get_or_create(key, snap_->config_hash, [&] { return overview::to_json(overview(key)).dump(); });
  }

  std::size_t cached_overviews() const { return cache_.size(); }

  std::vector<annotate::Annotation> annotations(std::string_view text) const {
    return annotate::annotate(text, snap_->graph, matcher_, snap_->centrality, snap_->frequency,
                              {snap_->config.frequency_rank_cutoff});
  }

  nlohmann::ordered_json annotate_json(std::string_view text, bool with_html) const {
    auto anns = annotations(text);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& a : anns)
      list.push_back({{"start", a.start}, {"end", a.end}, {"concept_uri", a.concept_uri},
                      {"label", snap_->graph.at(a.concept_uri).label}});
    nlohmann::ordered_json j;
    j["schema_version"] = kSnapshotSchemaVersion;
    j["annotations"] = std::move(list);
    if (with_html) j["html"] = annotate::to_html(text, anns);
    return j;
  }

  /// Concepts whose label, or uri without namespace, starts with `prefix` (case-insensitive).
  nlohmann::ordered_json concepts_json(std::string_view prefix, std::size_t limit = 50) const {
    std::string p = text::lower(prefix);
    std::vector<const kg::Concept*> hits;
    for (const auto& [uri, c] : snap_->graph.concepts) {
      std::string local = uri.substr(std::min(uri.size(), snap_->graph.ns.size()));
      if (text::lower(c.label).starts_with(p) || text::lower(local).starts_with(p)) hits.push_back(&c);
    }
    std::sort(hits.begin(), hits.end(), [](auto* a, auto* b) { return a->label != b->label ? a->label < b->label : a->uri < b->uri; });
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < hits.size() && i < limit; ++i) list.push_back({{"uri", hits[i]->uri}, {"label", hits[i]->label}});
    return {{"schema_version", kSnapshotSchemaVersion}, {"total", hits.size()}, {"concepts", std::move(list)}};
  }

  nlohmann::ordered_json taxonomy_json() const {
    nlohmann::ordered_json trees = nlohmann::ordered_json::array();
    for (const auto& t : snap_->forest.trees) {
      nlohmann::ordered_json edges = nlohmann::ordered_json::array();
      for (const auto& [child, parent] : t.parent) edges.push_back({{"child", child}, {"parent", parent}});
      trees.push_back({{"root_label", t.root_label}, {"root_sense", t.root_sense}, {"members", t.members}, {"edges", std::move(edges)}});
    }
    return {{"schema_version", kSnapshotSchemaVersion}, {"trees", std::move(trees)},
            {"unaligned", snap_->alignment.misses}};
  }

  nlohmann::ordered_json health_json() const {
    auto j = snapshot_summary(*snap_);
    j["status"] = "ok";
    j["cached_overviews"] = cache_.size();
    return j;
  }

 private:
  std::shared_ptr<const Snapshot> snap_;
  taxonomy::Taxonomy taxonomy_;
  annotate::ConceptMatcher matcher_;
  std::shared_ptr<const nlp::Embedder> embedder_;
  nlp::LeadSentenceSummarizer summarizer_;
  overview::OverviewConfig overview_config_;
  mutable overview::OverviewCache cache_;
};

}  // namespace espace::service
