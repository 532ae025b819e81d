#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "espace/annotate/centrality.hpp"
#include "espace/annotate/frequency.hpp"
#include "espace/error.hpp"
#include "espace/kg/corpus.hpp"
#include "espace/kg/graph.hpp"
#include "espace/kg/io.hpp"
#include "espace/nlp/parser.hpp"
#include "espace/nlp/senses.hpp"
#include "espace/service/config.hpp"
#include "espace/taxonomy/forest.hpp"
#include "espace/taxonomy/io.hpp"
#include "espace/taxonomy/lattice.hpp"

namespace espace::service {

inline constexpr int kSnapshotSchemaVersion = 1;

/// A built Explanatory Space. All parts come from one corpus and one configuration.
struct Snapshot {
  PipelineConfig config;
  kg::KnowledgeGraph graph;
  taxonomy::AlignmentResult alignment;
  taxonomy::TaxonomyForest forest;
  annotate::CentralityIndex centrality;
  annotate::FrequencyTable frequency;
  std::uint64_t corpus_hash = 0;
  std::uint64_t config_hash = 0;
  std::uint64_t lexicon_hash = 0;
};

/// Reads the documents of a manifest. Unreadable files are reported and skipped.
inline std::vector<kg::RawDocument> load_documents(const std::vector<ManifestEntry>& manifest,
                                                   std::vector<std::string>& warnings) {
  std::vector<kg::RawDocument> docs;
  for (const auto& e : manifest) {
    std::ifstream in(e.path, std::ios::binary);
    if (!in) {
      warnings.push_back("cannot read " + e.path);
      continue;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    docs.push_back({e.title, ss.str()});
  }
  return docs;
}

inline std::uint64_t file_hash(const std::string& path) {
  if (path.empty()) return 0;
  std::uint64_t h = text::kFnvOffset;
  auto add_file = [&](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    h = text::fnv1a(ss.str(), h);
  };
  if (std::filesystem::is_directory(path)) {
    for (const char* f : {"data.noun", "index.noun"}) add_file(std::filesystem::path(path) / f);
  } else {
    add_file(path);
  }
  return h;
}

struct BuildInputs {
  const nlp::DependencyParser& parser;
  const nlp::LexicalDatabase* lexicon = nullptr;  // null: no taxonomy
  annotate::FrequencyTable frequency;
};

/// graph -> sense alignment -> FCA forest -> betweenness.
inline Snapshot build_snapshot(const std::vector<kg::RawDocument>& docs, const PipelineConfig& config,
                               BuildInputs inputs) {
  config.validate();
  Snapshot snap;
  snap.config = config;
  snap.config_hash = config.hash();
  snap.lexicon_hash = file_hash(config.lexicon);
  auto corpus = kg::ingest_corpus(docs, inputs.parser);
  snap.corpus_hash = corpus.content_hash();
  snap.graph = kg::build_graph(corpus, inputs.parser, {config.ns, config.threads});
  if (inputs.lexicon) {
    nlp::MostFrequentSense wsd(*inputs.lexicon);
    snap.alignment = taxonomy::align_concepts(snap.graph, wsd);
    if (!snap.alignment.aligned.empty()) {
      auto ctx = taxonomy::build_formal_context(snap.alignment.aligned, inputs.lexicon);
      auto lattice = taxonomy::fca_lattice(ctx, {config.max_fca_objects, taxonomy::LatticeLimits{}.max_concepts});
      snap.forest = taxonomy::extract_forest(lattice, ctx);
    }
  } else {
    for (const auto& [uri, c] : snap.graph.concepts) snap.alignment.misses.push_back(uri);
  }
  snap.centrality = annotate::compute_betweenness(snap.graph, {config.betweenness_samples, 1});
  snap.frequency = std::move(inputs.frequency);
  return snap;
}

inline nlohmann::ordered_json snapshot_summary(const Snapshot& s) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSnapshotSchemaVersion;
  j["corpus_hash"] = text::hex64(s.corpus_hash);
  j["config_hash"] = text::hex64(s.config_hash);
  j["lexicon_hash"] = text::hex64(s.lexicon_hash);
  j["counts"] = {{"documents", s.graph.corpus.documents.size()},
                 {"paragraphs", s.graph.corpus.paragraphs.size()},
                 {"sentences", s.graph.corpus.sentences.size()},
                 {"concepts", s.graph.concepts.size()},
                 {"triples", s.graph.triples.size()},
                 {"aligned", s.alignment.aligned.size()},
                 {"trees", s.forest.trees.size()},
                 {"warnings", s.graph.warnings.size()}};
  return j;
}

namespace detail {

inline void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  out << body;
  if (!out) throw Error(ErrorCode::Io, "cannot write " + p.string());
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Writes the snapshot into `dir`, replacing any previous one only once all files exist.
inline void write_snapshot(const Snapshot& s, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::path tmp = dir;
  tmp += ".tmp";
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  auto summary = snapshot_summary(s);
  nlohmann::json cfg = s.config.content_json();
  cfg["annotate_max_bytes"] = s.config.annotate_max_bytes;
  summary["config"] = cfg;
  detail::write_file(tmp / "snapshot.json", summary.dump(2) + "\n");

  std::ostringstream corpus, graph, tax, central, freq;
  kg::write_corpus_jsonl(s.graph.corpus, corpus);
  kg::write_graph_jsonl(s.graph, graph);
  taxonomy::write_taxonomy_jsonl(s.alignment, s.forest, tax);
  for (const auto& [uri, bc] : s.centrality)
    central << nlohmann::json{{"uri", uri}, {"betweenness", bc}}.dump() << '\n';
  for (const auto& [lemma, rank] : s.frequency.entries()) freq << lemma << '\t' << rank << '\n';
  detail::write_file(tmp / "corpus.jsonl", corpus.str());
  detail::write_file(tmp / "graph.jsonl", graph.str());
  detail::write_file(tmp / "taxonomy.jsonl", tax.str());
  detail::write_file(tmp / "centrality.jsonl", central.str());
  detail::write_file(tmp / "frequency.tsv", freq.str());

  fs::path old = dir;
  old += ".old";
  fs::remove_all(old);
  if (fs::exists(dir)) fs::rename(dir, old);
  fs::rename(tmp, dir);
  fs::remove_all(old);
}

/// Throws Error(Io) for a missing directory and Error(Format) for damaged files.
inline Snapshot read_snapshot(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::Io, "no snapshot at " + dir.string());
  Snapshot s;
  nlohmann::json summary;
  try {
    summary = nlohmann::json::parse(detail::read_file(dir / "snapshot.json"));
    if (summary.at("schema_version").get<int>() != kSnapshotSchemaVersion)
      throw Error(ErrorCode::Format, "unsupported snapshot schema version");
    s.config = PipelineConfig::from_json(summary.at("config"));
    s.corpus_hash = std::stoull(summary.at("corpus_hash").get<std::string>(), nullptr, 16);
    s.config_hash = std::stoull(summary.at("config_hash").get<std::string>(), nullptr, 16);
    s.lexicon_hash = std::stoull(summary.at("lexicon_hash").get<std::string>(), nullptr, 16);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, std::string("bad snapshot.json: ") + e.what());
  }
  if (s.config.hash() != s.config_hash) throw Error(ErrorCode::Format, "snapshot configuration does not match its hash");
  std::istringstream corpus(detail::read_file(dir / "corpus.jsonl"));
  std::istringstream graph(detail::read_file(dir / "graph.jsonl"));
  std::istringstream tax(detail::read_file(dir / "taxonomy.jsonl"));
  std::istringstream central(detail::read_file(dir / "centrality.jsonl"));
  std::istringstream freq(detail::read_file(dir / "frequency.tsv"));
  s.graph = kg::read_graph_jsonl(graph, kg::read_corpus_jsonl(corpus));
  if (s.graph.corpus.content_hash() != s.corpus_hash) throw Error(ErrorCode::Format, "snapshot corpus does not match its hash");
  taxonomy::read_taxonomy_jsonl(tax, s.alignment, s.forest);
  kg::detail::for_each_record(central, [&](const nlohmann::json& j) { s.centrality.emplace(j.at("uri"), j.at("betweenness")); });
  s.frequency = annotate::FrequencyTable::from_tsv(freq);
  return s;
}

}  // namespace espace::service
