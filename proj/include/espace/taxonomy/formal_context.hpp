#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "espace/error.hpp"
#include "espace/kg/graph.hpp"
#include "espace/nlp/senses.hpp"

namespace espace::taxonomy {

using Bits = boost::dynamic_bitset<>;

/// Objects x attributes incidence. rows[g][m] is true iff object g has attribute m.
struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<Bits> rows;
  // lemma used when an attribute labels a tree, and its distance from the most
  // abstract end of the hypernym chains (0 = most abstract)
  std::vector<std::string> attribute_labels;
  std::vector<std::size_t> attribute_depth;

  FormalContext() = default;

  /// Plain context; labels default to the attribute names and all depths are 0.
  FormalContext(std::vector<std::string> objs, std::vector<std::string> attrs,
                const std::vector<std::vector<bool>>& incidence)
      : objects(std::move(objs)), attributes(std::move(attrs)) {
    if (incidence.size() != objects.size()) throw Error(ErrorCode::Format, "incidence rows do not match objects");
    for (const auto& r : incidence) {
      if (r.size() != attributes.size()) throw Error(ErrorCode::Format, "incidence columns do not match attributes");
      Bits b(attributes.size());
      for (std::size_t m = 0; m < r.size(); ++m) b[m] = r[m];
      rows.push_back(std::move(b));
    }
    attribute_labels = attributes;
    attribute_depth.assign(attributes.size(), 0);
    validate();
  }

  std::size_t object_count() const { return objects.size(); }
  std::size_t attribute_count() const { return attributes.size(); }
  bool incident(std::size_t g, std::size_t m) const { return rows[g][m]; }

  void validate() const {
    auto unique = [](const std::vector<std::string>& v, const char* what) {
      std::unordered_set<std::string> seen;
      for (const auto& x : v)
        if (!seen.insert(x).second) throw Error(ErrorCode::Format, std::string("duplicate ") + what + " " + x);
    };
    unique(objects, "object");
    unique(attributes, "attribute");
    if (rows.size() != objects.size()) throw Error(ErrorCode::Format, "incidence rows do not match objects");
    for (const auto& r : rows)
      if (r.size() != attributes.size()) throw Error(ErrorCode::Format, "incidence columns do not match attributes");
    if (attribute_labels.size() != attributes.size() || attribute_depth.size() != attributes.size())
      throw Error(ErrorCode::Format, "attribute metadata does not match attributes");
  }

  /// Column of attribute m as an object set.
  Bits column(std::size_t m) const {
    Bits c(objects.size());
    for (std::size_t g = 0; g < objects.size(); ++g) c[g] = rows[g][m];
    return c;
  }

  /// Attributes shared by every object of `extent` (all attributes for the empty set).
  Bits intent_of(const Bits& extent) const {
    Bits out(attributes.size());
    out.set();
    for (auto g = extent.find_first(); g != Bits::npos; g = extent.find_next(g)) out &= rows[g];
    return out;
  }

  /// Objects having every attribute of `intent`.
  Bits extent_of(const Bits& intent) const {
    Bits out(objects.size());
    for (std::size_t g = 0; g < objects.size(); ++g) out[g] = intent.is_subset_of(rows[g]);
    return out;
  }
};

using Alignment = std::map<std::string, nlp::SenseEntry>;

struct AlignmentResult {
  Alignment aligned;
  std::vector<std::string> misses;  // concept uris without a sense, sorted
};

/// Disambiguates each concept label against the first sentence it was found in.
inline AlignmentResult align_concepts(const kg::KnowledgeGraph& graph, const nlp::SenseDisambiguator& wsd) {
  AlignmentResult out;
  for (const auto& [uri, c] : graph.concepts) {
    std::string context;
    auto src = graph.source_edges.lower_bound({uri, 0});
    if (src != graph.source_edges.end() && src->first == uri) context = graph.corpus.sentence(src->second).text;
    auto sense = c.label.empty() ? std::nullopt : wsd.disambiguate(c.label, context);
    if (sense)
      out.aligned.emplace(uri, std::move(*sense));
    else
      out.misses.push_back(uri);
  }
  return out;
}

/// Objects are the aligned uris, attributes every sense on their hypernym chains
/// (each object's own sense included). Throws Error(EmptyContext) for an empty alignment.
inline FormalContext build_formal_context(const Alignment& alignment, const nlp::LexicalDatabase* db = nullptr) {
  if (alignment.empty()) throw Error(ErrorCode::EmptyContext, "no aligned concepts");
  std::map<std::string, std::size_t> depth;  // sense -> distance from chain top
  std::map<std::string, std::string> label;
  for (const auto& [uri, e] : alignment) {
    std::vector<std::string> chain{e.sense_id};
    chain.insert(chain.end(), e.hypernyms.begin(), e.hypernyms.end());
    for (std::size_t i = 0; i < chain.size(); ++i) {
      std::size_t d = chain.size() - 1 - i;
      auto [it, inserted] = depth.emplace(chain[i], d);
      if (!inserted) it->second = std::min(it->second, d);
    }
    label.emplace(e.sense_id, e.lemma);
  }
  FormalContext ctx;
  std::map<std::string, std::size_t> col;
  for (const auto& [sense, d] : depth) {
    col.emplace(sense, ctx.attributes.size());
    ctx.attributes.push_back(sense);
    std::string lemma = sense;
    if (auto it = label.find(sense); it != label.end()) lemma = it->second;
    else if (db)
      if (const auto* s = db->sense(sense)) lemma = s->lemma;
    ctx.attribute_labels.push_back(lemma);
    ctx.attribute_depth.push_back(d);
  }
  for (const auto& [uri, e] : alignment) {
    Bits row(ctx.attributes.size());
    row[col.at(e.sense_id)] = true;
    for (const auto& h : e.hypernyms) row[col.at(h)] = true;
    ctx.objects.push_back(uri);
    ctx.rows.push_back(std::move(row));
  }
  ctx.validate();
  return ctx;
}

}  // namespace espace::taxonomy
