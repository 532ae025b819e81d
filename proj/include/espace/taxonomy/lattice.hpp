#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "espace/error.hpp"
#include "espace/taxonomy/formal_context.hpp"

namespace espace::taxonomy {

struct FormalConcept {
  Bits extent;
  Bits intent;
};

/// Nodes are sorted by decreasing extent size, ties by extent (lowest object index first),
/// so nodes.front() is the top and nodes.back() the bottom.
struct ConceptLattice {
  std::vector<FormalConcept> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper), sorted
  std::vector<std::vector<std::size_t>> upper;
  std::vector<std::vector<std::size_t>> lower;

  std::size_t top() const { return 0; }
  std::size_t bottom() const { return nodes.size() - 1; }
  std::size_t size() const { return nodes.size(); }
};

struct LatticeLimits {
  std::size_t max_objects = 5000;
  std::size_t max_concepts = 200000;
};

namespace detail {

inline bool extent_before(const Bits& a, const Bits& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca > cb;
  for (auto i = a.find_first(), j = b.find_first();; i = a.find_next(i), j = b.find_next(j)) {
    if (i == Bits::npos || j == Bits::npos) return false;
    if (i != j) return i < j;
  }
}

inline bool prefix_equal(const Bits& a, const Bits& b, std::size_t j) {
  for (std::size_t k = 0; k < j; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

}  // namespace detail

/// Covering relation of a set of formal concepts: an upper cover is a minimal strict
/// superset of the extent. Sorts `nodes` into canonical order first.
inline ConceptLattice order_concepts(std::vector<FormalConcept> nodes) {
  std::sort(nodes.begin(), nodes.end(),
            [](const auto& a, const auto& b) { return detail::extent_before(a.extent, b.extent); });
  ConceptLattice lat;
  lat.nodes = std::move(nodes);
  const std::size_t n = lat.nodes.size();
  lat.upper.assign(n, {});
  lat.lower.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const Bits& e = lat.nodes[i].extent;
    std::vector<std::size_t> kept;
    // earlier nodes have larger or equal extents; walk towards the top so sizes grow
    for (std::size_t j = i; j-- > 0;) {
      const Bits& f = lat.nodes[j].extent;
      if (f.count() == e.count() || !e.is_subset_of(f)) continue;
      bool minimal = true;
      for (auto k : kept)
        if (lat.nodes[k].extent.is_proper_subset_of(f)) {
          minimal = false;
          break;
        }
      if (minimal) kept.push_back(j);
    }
    std::sort(kept.begin(), kept.end());
    for (auto j : kept) {
      lat.covers.emplace_back(i, j);
      lat.upper[i].push_back(j);
      lat.lower[j].push_back(i);
    }
  }
  std::sort(lat.covers.begin(), lat.covers.end());
  for (auto& l : lat.lower) std::sort(l.begin(), l.end());
  return lat;
}

/// All formal concepts of `ctx` with their covering order, enumerated depth-first in
/// lectic order of intents (close-by-one: each closure is kept only if it adds no
/// attribute before the one that generated it).
inline ConceptLattice fca_lattice(const FormalContext& ctx, const LatticeLimits& limits = {}) {
  if (ctx.object_count() > limits.max_objects)
    throw Error(ErrorCode::SizeLimit, "formal context has " + std::to_string(ctx.object_count()) +
                                          " objects, limit is " + std::to_string(limits.max_objects));
  const std::size_t m = ctx.attribute_count();
  std::vector<Bits> columns;
  columns.reserve(m);
  for (std::size_t a = 0; a < m; ++a) columns.push_back(ctx.column(a));

  std::vector<FormalConcept> found;
  Bits all(ctx.object_count());
  all.set();
  struct Frame {
    Bits extent, intent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({all, ctx.intent_of(all), 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    found.push_back({f.extent, f.intent});
    if (found.size() > limits.max_concepts)
      throw Error(ErrorCode::SizeLimit, "concept lattice exceeds " + std::to_string(limits.max_concepts) + " nodes");
    // children pushed in reverse so they pop in ascending attribute order
    std::vector<Frame> children;
    for (std::size_t j = f.next; j < m; ++j) {
      if (f.intent[j]) continue;
      Bits extent = f.extent & columns[j];
      Bits intent = ctx.intent_of(extent);
      if (!detail::prefix_equal(intent, f.intent, j)) continue;
      children.push_back({std::move(extent), std::move(intent), j + 1});
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return order_concepts(std::move(found));
}

}  // namespace espace::taxonomy
