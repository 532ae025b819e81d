#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "espace/error.hpp"
#include "espace/kg/graph.hpp"
#include "espace/taxonomy/lattice.hpp"

namespace espace::taxonomy {

struct TaxonomyTree {
  std::string root_label;  // lemma of the most abstract hypernym shared by the members
  std::string root_sense;
  std::vector<std::string> members;           // sorted
  std::map<std::string, std::string> parent;  // child uri -> parent uri; members without one hang off the root

  friend bool operator==(const TaxonomyTree&, const TaxonomyTree&) = default;
};

struct TaxonomyForest {
  std::vector<TaxonomyTree> trees;  // sorted by root label

  std::optional<std::size_t> tree_of(std::string_view uri) const {
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (std::binary_search(trees[i].members.begin(), trees[i].members.end(), uri)) return i;
    return std::nullopt;
  }

  friend bool operator==(const TaxonomyForest&, const TaxonomyForest&) = default;
};

namespace detail {

// Most abstract attribute of an intent: smallest depth, then label, then id.
inline std::optional<std::size_t> most_abstract(const FormalContext& ctx, const Bits& intent) {
  std::optional<std::size_t> best;
  for (auto a = intent.find_first(); a != Bits::npos; a = intent.find_next(a)) {
    if (!best) {
      best = a;
      continue;
    }
    auto key = [&](std::size_t x) {
      return std::tie(ctx.attribute_depth[x], ctx.attribute_labels[x], ctx.attributes[x]);
    };
    if (key(a) < key(*best)) best = a;
  }
  return best;
}

}  // namespace detail

/// Splits the lattice into trees. When every object shares some hypernym the whole
/// lattice is one tree; otherwise each lower cover of the top roots a tree. Objects
/// reachable from several roots join the first tree in label order. Inside a tree an
/// object's parent is the member whose object concept is the smallest strict superset
/// of its own (ties by uri).
inline TaxonomyForest extract_forest(const ConceptLattice& lat, const FormalContext& ctx) {
  TaxonomyForest forest;
  if (lat.nodes.empty()) return forest;
  std::vector<std::size_t> roots;
  if (lat.nodes[lat.top()].intent.any()) {
    roots.push_back(lat.top());
  } else {
    for (auto c : lat.lower[lat.top()])
      if (lat.nodes[c].extent.any() && lat.nodes[c].intent.any()) roots.push_back(c);
  }

  struct Candidate {
    std::size_t node;
    std::size_t attr;
  };
  std::vector<Candidate> ordered;
  for (auto r : roots) {
    // prefer an attribute not inherited from the top as the label
    Bits own = lat.nodes[r].intent;
    if (r != lat.top()) own -= lat.nodes[lat.top()].intent;
    auto a = detail::most_abstract(ctx, own.any() ? own : lat.nodes[r].intent);
    if (a) ordered.push_back({r, *a});
  }
  std::sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    return std::tie(ctx.attribute_labels[x.attr], ctx.attributes[x.attr], x.node) <
           std::tie(ctx.attribute_labels[y.attr], ctx.attributes[y.attr], y.node);
  });

  // object concept extents
  std::vector<Bits> gamma;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    Bits single(ctx.object_count());
    single[g] = true;
    gamma.push_back(ctx.extent_of(ctx.intent_of(single)));
  }

  std::vector<bool> assigned(ctx.object_count(), false);
  for (const auto& cand : ordered) {
    TaxonomyTree tree;
    tree.root_label = ctx.attribute_labels[cand.attr];
    tree.root_sense = ctx.attributes[cand.attr];
    std::vector<std::size_t> members;
    const Bits& ext = lat.nodes[cand.node].extent;
    for (auto g = ext.find_first(); g != Bits::npos; g = ext.find_next(g))
      if (!assigned[g]) {
        assigned[g] = true;
        members.push_back(g);
      }
    if (members.empty()) continue;
    for (auto g : members) {
      std::optional<std::size_t> best;
      for (auto h : members) {
        if (h == g || !gamma[g].is_proper_subset_of(gamma[h])) continue;
        if (!best || gamma[h].count() < gamma[*best].count() ||
            (gamma[h].count() == gamma[*best].count() && ctx.objects[h] < ctx.objects[*best]))
          best = h;
      }
      if (best) tree.parent.emplace(ctx.objects[g], ctx.objects[*best]);
      tree.members.push_back(ctx.objects[g]);
    }
    std::sort(tree.members.begin(), tree.members.end());
    forest.trees.push_back(std::move(tree));
  }
  return forest;
}

/// Super/subclass navigation over forest edges merged with the graph's composition edges.
class Taxonomy {
 public:
  Taxonomy(const kg::KnowledgeGraph& graph, const TaxonomyForest& forest) : graph_(&graph), forest_(&forest) {
    for (const auto& tree : forest.trees)
      for (const auto& [child, parent] : tree.parent) link(child, parent);
    for (const auto& [sub, super] : graph.subclass_edges) link(sub, super);
  }

  /// Breadth-first over parents, each level in lexicographic order. Throws Error(MissingConcept).
  std::vector<std::string> superclasses(std::string_view uri) const { return walk(uri, up_); }
  std::vector<std::string> subclasses(std::string_view uri) const { return walk(uri, down_); }

  /// The concept followed by all its subclasses.
  std::vector<std::string> subtree(std::string_view uri) const {
    auto out = subclasses(uri);
    out.insert(out.begin(), std::string(uri));
    return out;
  }

  std::optional<std::string> tree_label(std::string_view uri) const {
    if (auto t = forest_->tree_of(uri)) return forest_->trees[*t].root_label;
    return std::nullopt;
  }

  const TaxonomyForest& forest() const { return *forest_; }

 private:
  const kg::KnowledgeGraph* graph_;
  const TaxonomyForest* forest_;
  std::map<std::string, std::set<std::string>> up_, down_;

  void link(const std::string& sub, const std::string& super) {
    if (sub == super) return;
    up_[sub].insert(super);
    down_[super].insert(sub);
  }

  std::vector<std::string> walk(std::string_view start,
                                const std::map<std::string, std::set<std::string>>& edges) const {
    if (!graph_->contains(start)) throw Error(ErrorCode::MissingConcept, "unknown concept " + std::string(start));
    std::vector<std::string> out;
    std::set<std::string> seen{std::string(start)};
    std::vector<std::string> level{std::string(start)};
    while (!level.empty()) {
      std::set<std::string> next;
      for (const auto& u : level)
        if (auto it = edges.find(u); it != edges.end())
          for (const auto& v : it->second)
            if (!seen.count(v)) next.insert(v);
      level.assign(next.begin(), next.end());
      for (const auto& v : level) {
        seen.insert(v);
        out.push_back(v);
      }
    }
    return out;
  }
};

}  // namespace espace::taxonomy
