#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"

#include "espace/kg/io.hpp"
#include "espace/taxonomy/forest.hpp"

namespace espace::taxonomy {

/// Alignment, misses, trees and one (child, parent, tree_root_label) record per forest edge.
inline void write_taxonomy_jsonl(const AlignmentResult& alignment, const TaxonomyForest& forest, std::ostream& out) {
  using nlohmann::json;
  for (const auto& [uri, e] : alignment.aligned)
    out << json{{"type", "alignment"}, {"uri", uri}, {"sense_id", e.sense_id}, {"lemma", e.lemma}, {"hypernyms", e.hypernyms}}
               .dump()
        << '\n';
  for (const auto& uri : alignment.misses) out << json{{"type", "miss"}, {"uri", uri}}.dump() << '\n';
  for (std::size_t i = 0; i < forest.trees.size(); ++i) {
    const auto& t = forest.trees[i];
    out << json{{"type", "tree"}, {"index", i}, {"root_label", t.root_label}, {"root_sense", t.root_sense}, {"members", t.members}}
               .dump()
        << '\n';
    for (const auto& [child, parent] : t.parent)
      out << json{{"type", "edge"}, {"child_uri", child}, {"parent_uri", parent}, {"tree_root_label", t.root_label}, {"tree", i}}
                 .dump()
          << '\n';
  }
}

inline void read_taxonomy_jsonl(std::istream& in, AlignmentResult& alignment, TaxonomyForest& forest) {
  kg::detail::for_each_record(in, [&](const nlohmann::json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "alignment") {
      alignment.aligned.emplace(j.at("uri"), nlp::SenseEntry{j.at("sense_id"), j.at("lemma"),
                                                             j.at("hypernyms").get<std::vector<std::string>>()});
    } else if (type == "miss") {
      alignment.misses.push_back(j.at("uri"));
    } else if (type == "tree") {
      kg::detail::expect_id(j.at("index"), forest.trees.size(), "tree");
      forest.trees.push_back({j.at("root_label"), j.at("root_sense"), j.at("members").get<std::vector<std::string>>(), {}});
    } else if (type == "edge") {
      std::size_t tree = j.at("tree");
      if (tree >= forest.trees.size()) throw Error(ErrorCode::Format, "edge before its tree");
      forest.trees[tree].parent.emplace(j.at("child_uri"), j.at("parent_uri"));
    } else {
      throw Error(ErrorCode::Format, "unexpected taxonomy record " + type);
    }
  });
}

}  // namespace espace::taxonomy
