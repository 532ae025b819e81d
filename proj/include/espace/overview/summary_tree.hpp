#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "espace/error.hpp"
#include "espace/nlp/summarizer.hpp"
#include "espace/overview/pertinence.hpp"

namespace espace::overview {

struct SummaryNode {
  std::string summary;  // for leaves, the answer context itself
  std::vector<SummaryNode> children;
  std::optional<PertinentAnswer> answer;  // set on leaves built from answers

  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const SummaryNode&, const SummaryNode&) = default;
};

/// Left-packed k-ary tree over the leaves: each level groups k consecutive nodes (the
/// last group may be short) under a parent summarizing their concatenation, until one
/// node remains. A single leaf still gets a parent carrying its summary.
/// Returns nullopt for no leaves; throws Error(Configuration) when k < 2.
inline std::optional<SummaryNode> build_summary_tree(std::vector<SummaryNode> leaves, const nlp::Summarizer& summarizer,
                                                     std::size_t k, std::size_t budget) {
  if (k < 2) throw Error(ErrorCode::Configuration, "summary tree fan-out must be at least 2");
  if (leaves.empty()) return std::nullopt;
  std::vector<SummaryNode> level = std::move(leaves);
  do {
    std::vector<SummaryNode> parents;
    for (std::size_t i = 0; i < level.size(); i += k) {
      SummaryNode parent;
      std::string joined;
      for (std::size_t j = i; j < level.size() && j < i + k; ++j) {
        if (!joined.empty() && !level[j].summary.empty()) joined += ' ';
        joined += level[j].summary;
        parent.children.push_back(std::move(level[j]));
      }
      parent.summary = summarizer.summarize(joined, budget);
      parents.push_back(std::move(parent));
    }
    level = std::move(parents);
  } while (level.size() > 1);
  return std::move(level.front());
}

inline std::vector<SummaryNode> leaves_from_texts(const std::vector<std::string>& texts) {
  std::vector<SummaryNode> out;
  for (const auto& t : texts) out.push_back({t, {}, std::nullopt});
  return out;
}

/// Leaves left to right.
inline void collect_leaves(const SummaryNode& node, std::vector<const SummaryNode*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (const auto& c : node.children) collect_leaves(c, out);
}

inline std::size_t tree_depth(const SummaryNode& node) {
  std::size_t d = 0;
  for (const auto& c : node.children) d = std::max(d, 1 + tree_depth(c));
  return d;
}

}  // namespace espace::overview
