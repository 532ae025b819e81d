#pragma once

// Line-delimited JSON for corpora and graphs: one record per line, each with a "type".

#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"

#include "espace/error.hpp"
#include "espace/kg/graph.hpp"

namespace espace::kg {

inline void write_corpus_jsonl(const DocumentCorpus& c, std::ostream& out) {
  using nlohmann::json;
  for (const auto& d : c.documents)
    out << json{{"type", "document"}, {"id", d.id}, {"title", d.title}, {"paragraphs", d.paragraph_ids}}.dump() << '\n';
  for (const auto& p : c.paragraphs)
    out << json{{"type", "paragraph"}, {"id", p.id}, {"doc_id", p.doc_id}, {"text", p.text}}.dump() << '\n';
  for (const auto& s : c.sentences)
    out << json{{"type", "sentence"}, {"id", s.id},           {"paragraph_id", s.paragraph_id},
                {"begin", s.span.begin}, {"end", s.span.end}, {"text", s.text}}
               .dump()
        << '\n';
}

namespace detail {

inline void expect_id(std::size_t got, std::size_t want, const char* what) {
  if (got != want) throw Error(ErrorCode::Format, std::string(what) + " ids must be dense and ordered");
}

template <typename F>
void for_each_record(std::istream& in, F f) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      f(j);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Format, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace detail

inline DocumentCorpus read_corpus_jsonl(std::istream& in) {
  DocumentCorpus c;
  detail::for_each_record(in, [&](const nlohmann::json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "document") {
      detail::expect_id(j.at("id"), c.documents.size(), "document");
      c.documents.push_back({j.at("id"), j.at("title"), j.at("paragraphs").get<std::vector<std::size_t>>()});
    } else if (type == "paragraph") {
      detail::expect_id(j.at("id"), c.paragraphs.size(), "paragraph");
      c.paragraphs.push_back({j.at("id"), j.at("doc_id"), j.at("text")});
    } else if (type == "sentence") {
      detail::expect_id(j.at("id"), c.sentences.size(), "sentence");
      c.sentences.push_back({j.at("id"), j.at("paragraph_id"), {j.at("begin"), j.at("end")}, j.at("text")});
    } else {
      throw Error(ErrorCode::Format, "unexpected corpus record " + type);
    }
  });
  return c;
}

/// The corpus is written separately; see write_corpus_jsonl.
inline void write_graph_jsonl(const KnowledgeGraph& g, std::ostream& out) {
  using nlohmann::json;
  out << json{{"type", "graph"}, {"namespace", g.ns}}.dump() << '\n';
  for (const auto& [uri, c] : g.concepts) {
    json occ = json::array();
    for (const auto& o : c.occurrences) occ.push_back({o.sentence_id, o.span.begin, o.span.end});
    out << json{{"type", "concept"},       {"uri", uri},       {"label", c.label},
                {"surfaces", c.surfaces},  {"occurrences", occ}, {"nominal_parts", c.nominal_parts},
                {"derived", c.derived}}
               .dump()
        << '\n';
  }
  for (const auto& t : g.triples)
    out << json{{"type", "triple"},
                {"id", t.id},
                {"subject", t.subject_uri},
                {"template", t.templ},
                {"object", t.object_uri},
                {"sentence_id", t.sentence_id},
                {"paragraph_id", t.paragraph_id},
                {"subject_surface", t.subject_surface},
                {"object_surface", t.object_surface}}
               .dump()
        << '\n';
  for (const auto& [sub, super] : g.subclass_edges)
    out << json{{"type", "subclass"}, {"sub", sub}, {"super", super}}.dump() << '\n';
  for (const auto& [key, sid] : g.source_edges)
    out << json{{"type", "source"}, {"key", key}, {"sentence_id", sid}}.dump() << '\n';
  for (const auto& w : g.warnings) out << json{{"type", "warning"}, {"message", w}}.dump() << '\n';
}

inline KnowledgeGraph read_graph_jsonl(std::istream& in, DocumentCorpus corpus) {
  KnowledgeGraph g;
  g.corpus = std::move(corpus);
  detail::for_each_record(in, [&](const nlohmann::json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "graph") {
      g.ns = j.at("namespace");
    } else if (type == "concept") {
      Concept c;
      c.uri = j.at("uri");
      c.label = j.at("label");
      c.surfaces = j.at("surfaces").get<std::vector<std::string>>();
      for (const auto& o : j.at("occurrences")) c.occurrences.push_back({o.at(0), {o.at(1), o.at(2)}});
      c.nominal_parts = j.at("nominal_parts").get<std::vector<std::string>>();
      c.derived = j.at("derived");
      g.concepts.emplace(c.uri, std::move(c));
    } else if (type == "triple") {
      detail::expect_id(j.at("id"), g.triples.size(), "triple");
      g.triples.push_back({j.at("id"), j.at("subject"), j.at("template"), j.at("object"), j.at("sentence_id"),
                           j.at("paragraph_id"), j.at("subject_surface"), j.at("object_surface")});
    } else if (type == "subclass") {
      g.subclass_edges.emplace(j.at("sub"), j.at("super"));
    } else if (type == "source") {
      g.source_edges.emplace(j.at("key"), j.at("sentence_id"));
    } else if (type == "warning") {
      g.warnings.push_back(j.at("message"));
    } else {
      throw Error(ErrorCode::Format, "unexpected graph record " + type);
    }
  });
  for (const auto& t : g.triples)
    if (!g.contains(t.subject_uri) || !g.contains(t.object_uri))
      throw Error(ErrorCode::Format, "triple " + std::to_string(t.id) + " references an unknown concept");
  return g;
}

}  // namespace espace::kg
