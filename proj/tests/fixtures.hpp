#pragma once

// Pipelines over the small text fixtures, shared by unit and acceptance tests.

#include <cstdio>
#include <map>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "espace/annotate/annotator.hpp"
#include "espace/kg/graph.hpp"
#include "espace/nlp/embedder.hpp"
#include "espace/nlp/parser.hpp"
#include "espace/nlp/senses.hpp"
#include "espace/overview/pertinence.hpp"
#include "espace/service/snapshot.hpp"
#include "espace/taxonomy/forest.hpp"
#include "espace/taxonomy/lattice.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace testing_support {

/// Graph, alignment and taxonomy of a set of documents, aligned against the shipped lexicon.
/// Not copyable: the taxonomy points into the graph and forest.
struct Pipeline {
  espace::nlp::RuleBasedParser parser;
  espace::kg::KnowledgeGraph graph;
  espace::taxonomy::AlignmentResult alignment;
  espace::taxonomy::TaxonomyForest forest;
  std::unique_ptr<espace::taxonomy::Taxonomy> taxonomy;

  explicit Pipeline(const std::vector<std::string>& docs) {
    using namespace espace;
    std::vector<kg::RawDocument> raw;
    for (const auto& d : docs) raw.push_back({"doc", d});
    graph = kg::build_graph(kg::ingest_corpus(raw, parser), parser);
    static const auto db = nlp::LexicalDatabase::load(data_path("lexicon.tsv"));
    nlp::MostFrequentSense wsd(db);
    alignment = taxonomy::align_concepts(graph, wsd);
    if (!alignment.aligned.empty()) {
      auto ctx = taxonomy::build_formal_context(alignment.aligned, &db);
      forest = taxonomy::extract_forest(taxonomy::fca_lattice(ctx), ctx);
    }
    taxonomy = std::make_unique<taxonomy::Taxonomy>(graph, forest);
  }
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  const std::string& paragraph(std::size_t id) const { return graph.corpus.paragraph(id).text; }
};

inline constexpr const char* kMicroConcept = "ns:inquiry";
inline constexpr double kMicroThreshold = 0.2;

/// Oracle clustering of the micro-corpus candidates, one line per answer:
/// archetype, triple id, kind, score (9 decimals), snippet.
inline std::string micro_cluster_oracle_lines(const Pipeline& p, const espace::nlp::Embedder& emb) {
  using namespace espace::overview;
  auto cands = gather_candidates(p.graph, kMicroConcept, *p.taxonomy);
  const auto& arch = default_archetypes();
  std::vector<std::vector<double>> scores;
  std::vector<std::size_t> tids;
  for (const auto& c : cands) {
    std::vector<double> row;
    auto a = emb.embed_answer(c.snippet, p.paragraph(c.context_paragraph_id));
    for (const auto& q : arch) row.push_back(espace::nlp::inner_product(emb.embed_question(q.question_text), a));
    scores.push_back(std::move(row));
    tids.push_back(c.triple_id);
  }
  auto got = oracle::cluster(scores, tids, kMicroThreshold);
  std::ostringstream out;
  for (std::size_t r = 0; r < got.size(); ++r)
    for (const auto& a : got[r]) {
      char score[32];
      std::snprintf(score, sizeof score, "%.9f", a.score);
      out << arch[r].name << '\t' << a.triple_id << '\t' << to_string(cands[a.candidate].kind) << '\t' << score
          << '\t' << cands[a.candidate].snippet << '\n';
    }
  return out.str();
}

/// Same format, from the library's clusters in archetype rank order.
inline std::string cluster_lines(const espace::overview::Clusters& clusters) {
  using namespace espace::overview;
  std::ostringstream out;
  for (const auto& q : default_archetypes()) {
    auto it = clusters.find(q.name);
    if (it == clusters.end()) continue;
    for (const auto& a : it->second) {
      char score[32];
      std::snprintf(score, sizeof score, "%.9f", a.score);
      out << q.name << '\t' << a.triple_id << '\t' << to_string(a.kind) << '\t' << score << '\t' << a.snippet << '\n';
    }
  }
  return out.str();
}

/// The toy corpus ingested with its shipped configuration.
inline espace::service::Snapshot toy_snapshot() {
  using namespace espace;
  auto config = service::PipelineConfig::load(data_path("toy/config.json"));
  std::vector<std::string> warnings;
  auto docs = service::load_documents(service::read_manifest(config.manifest), warnings);
  static const nlp::RuleBasedParser parser;
  static const auto db = nlp::LexicalDatabase::load(config.lexicon);
  return service::build_snapshot(docs, config, {parser, &db, annotate::FrequencyTable::load(config.frequency_table)});
}

struct OracleAnnotation {
  std::size_t start = 0;  // code points
  std::size_t end = 0;
  std::string concept_uri;
  friend bool operator==(const OracleAnnotation&, const OracleAnnotation&) = default;
};

/// Every whole-token span of the text checked against every label; the leftmost, then
/// longest, non-overlapping matches survive; then concepts off every shortest path
/// (brute-force betweenness 0) or made only of words ranked within `cutoff` are dropped.
inline std::vector<OracleAnnotation> annotation_oracle(const std::string& text, const espace::kg::KnowledgeGraph& g,
                                                       const espace::annotate::FrequencyTable& freq,
                                                       std::size_t cutoff) {
  using espace::kg::label_lemmas;
  struct Tok {
    std::size_t begin, end;
    std::string key;
  };
  std::vector<Tok> toks;
  static const std::regex word("[A-Za-z0-9]+|[^A-Za-z0-9\\s]");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), word); it != std::sregex_iterator(); ++it) {
    auto lemmas = label_lemmas(it->str());
    toks.push_back({static_cast<std::size_t>(it->position()), static_cast<std::size_t>(it->position() + it->length()),
                    lemmas.empty() ? std::string("\x01") : lemmas.front()});
  }
  std::map<std::string, std::string> labels;
  for (const auto& [uri, c] : g.concepts) {
    std::string key;
    for (const auto& l : label_lemmas(c.label)) key += (key.empty() ? "" : " ") + l;
    labels.emplace(key, uri);
  }
  struct Span {
    std::size_t first, last;
    std::string uri;
  };
  std::vector<Span> spans;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::string key;
    for (std::size_t j = i; j < toks.size(); ++j) {
      key += (j > i ? " " : "") + toks[j].key;
      if (auto it = labels.find(key); it != labels.end()) spans.push_back({i, j, it->second});
    }
  }
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return a.first != b.first ? a.first < b.first : a.last > b.last;
  });
  std::vector<Span> chosen;
  for (const auto& s : spans)
    if (chosen.empty() || s.first > chosen.back().last) chosen.push_back(s);

  std::map<std::string, std::size_t> id;
  for (const auto& [uri, c] : g.concepts) id.emplace(uri, id.size());
  oracle::Adjacency adj(id.size());
  for (const auto& t : g.triples) {
    auto a = id.at(t.subject_uri), b = id.at(t.object_uri);
    if (a == b) continue;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  auto bc = oracle::betweenness(adj);

  auto code_points = [&](std::size_t byte) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < byte; ++i) n += (static_cast<unsigned char>(text[i]) & 0xC0) != 0x80;
    return n;
  };
  std::vector<OracleAnnotation> out;
  for (const auto& s : chosen) {
    if (bc[id.at(s.uri)] == 0.0) continue;
    bool common = true;
    for (const auto& l : label_lemmas(g.at(s.uri).label)) {
      auto r = freq.rank(l);
      common = common && r && *r <= cutoff;
    }
    if (common) continue;
    out.push_back({code_points(toks[s.first].begin), code_points(toks[s.last].end), s.uri});
  }
  return out;
}

}  // namespace testing_support
