#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "espace/error.hpp"
#include "espace/kg/corpus.hpp"
#include "espace/kg/syntagm.hpp"
#include "espace/kg/triples.hpp"
#include "espace/kg/uri.hpp"
#include "espace/nlp/parser.hpp"

namespace espace::kg {

struct Concept {
  std::string uri;
  std::string label;  // lemma form, e.g. "bank account"
  std::vector<std::string> surfaces;  // distinct, in order of first occurrence
  std::vector<Occurrence> occurrences;
  std::vector<std::string> nominal_parts;
  bool derived = false;  // introduced only as a constituent of a composite

  friend bool operator==(const Concept&, const Concept&) = default;
};

struct KnowledgeGraph {
  std::string ns{kDefaultNamespace};
  DocumentCorpus corpus;
  std::map<std::string, Concept> concepts;
  std::vector<TemplateTriple> triples;  // triples[i].id == i
  std::set<std::pair<std::string, std::string>> subclass_edges;  // (sub, super)
  std::set<std::pair<std::string, std::size_t>> source_edges;    // (uri or triple key, sentence)
  std::vector<std::string> warnings;

  static std::string triple_key(std::size_t id) { return "triple:" + std::to_string(id); }

  bool contains(std::string_view uri) const { return concepts.count(std::string(uri)) > 0; }

  const Concept& at(std::string_view uri) const {
    auto it = concepts.find(std::string(uri));
    if (it == concepts.end()) throw Error(ErrorCode::MissingConcept, "unknown concept " + std::string(uri));
    return it->second;
  }

  const TemplateTriple& triple(std::size_t id) const {
    if (id >= triples.size()) throw Error(ErrorCode::MissingConcept, "unknown triple " + std::to_string(id));
    return triples[id];
  }

  friend bool operator==(const KnowledgeGraph&, const KnowledgeGraph&) = default;
};

/// Throws Error(MissingConcept) when either endpoint is not in the graph.
inline std::string realize_triple(const TemplateTriple& t, const KnowledgeGraph& kg) {
  const auto& subj = kg.at(t.subject_uri);
  const auto& obj = kg.at(t.object_uri);
  return realize_template(t.templ, t.subject_surface.empty() ? subj.label : t.subject_surface,
                          t.object_surface.empty() ? obj.label : t.object_surface);
}

/// Links every multi-token concept to each of its single-token nominal constituents,
/// creating the constituents when absent. Constituents inherit the composite's sources.
inline void add_composition_subclasses(KnowledgeGraph& kg) {
  std::vector<std::string> composites;
  for (const auto& [uri, c] : kg.concepts)
    if (text::split_words(c.label).size() > 1) composites.push_back(uri);
  for (const auto& uri : composites) {
    std::vector<std::string> parts = kg.concepts.at(uri).nominal_parts;
    for (const auto& part : parts) {
      std::string part_uri;
      try {
        part_uri = mint_uri(part, kg.ns);
      } catch (const Error&) {
        continue;
      }
      if (part_uri == uri || part_uri.find('_', kg.ns.size()) != std::string::npos) continue;
      auto [it, inserted] = kg.concepts.try_emplace(part_uri);
      if (inserted) {
        it->second.uri = part_uri;
        it->second.label = label_from_uri(part_uri, kg.ns);
        it->second.nominal_parts = {it->second.label};
        it->second.derived = true;
      }
      kg.subclass_edges.emplace(uri, part_uri);
      std::vector<std::size_t> sentences;
      for (auto e = kg.source_edges.lower_bound({uri, 0}); e != kg.source_edges.end() && e->first == uri; ++e)
        sentences.push_back(e->second);
      for (auto sid : sentences) kg.source_edges.emplace(part_uri, sid);
    }
  }
}

namespace detail {

struct SentenceExtraction {
  std::vector<Syntagm> syntagms;
  std::vector<TemplateTriple> triples;
  std::string warning;
};

inline SentenceExtraction extract_sentence(const DocumentCorpus& corpus, std::size_t sid,
                                           const nlp::DependencyParser& parser, std::string_view ns) {
  SentenceExtraction ex;
  const auto& rec = corpus.sentences[sid];
  try {
    auto parsed = parser.parse(rec.text);
    ex.syntagms = extract_syntagms(parsed, sid, ns);
    ex.triples = extract_template_triples(parsed, ex.syntagms, sid, rec.paragraph_id);
  } catch (const Error& e) {
    ex.warning = "sentence " + std::to_string(sid) + ": " + e.what();
  }
  return ex;
}

}  // namespace detail

struct BuildOptions {
  std::string ns{kDefaultNamespace};
  unsigned threads = 1;
};

/// Extracts concepts and triples from every sentence, merging in sentence order.
/// Per-sentence parser failures become warnings.
inline KnowledgeGraph build_graph(const DocumentCorpus& corpus, const nlp::DependencyParser& parser,
                                  const BuildOptions& opts = {}) {
  if (corpus.sentences.empty()) throw Error(ErrorCode::EmptyCorpus, "corpus has no sentences");
  std::vector<detail::SentenceExtraction> per(corpus.sentences.size());
  unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(per.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < per.size(); ++i) per[i] = detail::extract_sentence(corpus, i, parser, opts.ns);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < per.size(); i += workers)
          per[i] = detail::extract_sentence(corpus, i, parser, opts.ns);
      });
    for (auto& t : pool) t.join();
  }

  KnowledgeGraph kg;
  kg.ns = opts.ns;
  kg.corpus = corpus;
  for (auto& ex : per) {
    if (!ex.warning.empty()) kg.warnings.push_back(std::move(ex.warning));
    for (auto& syn : ex.syntagms) {
      auto [it, inserted] = kg.concepts.try_emplace(syn.uri);
      Concept& c = it->second;
      if (inserted) {
        c.uri = syn.uri;
        c.label = syn.lemma;
      }
      if (std::find(c.surfaces.begin(), c.surfaces.end(), syn.surface) == c.surfaces.end())
        c.surfaces.push_back(syn.surface);
      for (const auto& part : syn.nominal_parts)
        if (std::find(c.nominal_parts.begin(), c.nominal_parts.end(), part) == c.nominal_parts.end())
          c.nominal_parts.push_back(part);
      for (const auto& occ : syn.occurrences) {
        c.occurrences.push_back(occ);
        kg.source_edges.emplace(syn.uri, occ.sentence_id);
      }
    }
    for (auto& t : ex.triples) {
      t.id = kg.triples.size();
      kg.source_edges.emplace(KnowledgeGraph::triple_key(t.id), t.sentence_id);
      kg.triples.push_back(std::move(t));
    }
  }
  add_composition_subclasses(kg);
  return kg;
}

}  // namespace espace::kg
