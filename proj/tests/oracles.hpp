#pragma once

// Brute-force reference implementations used by unit and acceptance tests.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// ---- formal concept analysis ----

using Incidence = std::vector<std::vector<bool>>;  // [object][attribute]

struct Concept {
  std::vector<std::size_t> extent;  // sorted object ids
  std::vector<std::size_t> intent;  // sorted attribute ids
  friend bool operator==(const Concept&, const Concept&) = default;
  friend auto operator<=>(const Concept&, const Concept&) = default;
};

struct Lattice {
  std::vector<Concept> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
};

inline Incidence random_context(std::mt19937_64& rng, std::size_t max_objects, std::size_t max_attributes) {
  std::uniform_int_distribution<std::size_t> no(1, max_objects), na(1, max_attributes);
  std::size_t n = no(rng), m = na(rng);
  std::uniform_real_distribution<double> density_dist(0.1, 0.9), u(0.0, 1.0);
  double density = density_dist(rng);
  Incidence inc(n, std::vector<bool>(m));
  for (auto& row : inc)
    for (std::size_t a = 0; a < m; ++a) row[a] = u(rng) < density;
  return inc;
}

/// Every attribute subset, closed; then sorted by extent size descending and extent ids.
inline Lattice fca(const Incidence& inc, std::size_t attributes) {
  const std::size_t n = inc.size();
  std::set<Concept> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << attributes); ++mask) {
    Concept c;
    for (std::size_t g = 0; g < n; ++g) {
      bool all = true;
      for (std::size_t a = 0; a < attributes; ++a)
        if ((mask >> a & 1) && !inc[g][a]) all = false;
      if (all) c.extent.push_back(g);
    }
    for (std::size_t a = 0; a < attributes; ++a) {
      bool all = true;
      for (auto g : c.extent)
        if (!inc[g][a]) all = false;
      if (all) c.intent.push_back(a);
    }
    found.insert(c);
  }
  Lattice lat;
  lat.nodes.assign(found.begin(), found.end());
  std::sort(lat.nodes.begin(), lat.nodes.end(), [](const Concept& a, const Concept& b) {
    if (a.extent.size() != b.extent.size()) return a.extent.size() > b.extent.size();
    return a.extent < b.extent;
  });
  auto strict_subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t lo = 0; lo < lat.nodes.size(); ++lo)
    for (std::size_t up = 0; up < lat.nodes.size(); ++up) {
      if (!strict_subset(lat.nodes[lo].extent, lat.nodes[up].extent)) continue;
      bool between = false;
      for (std::size_t mid = 0; mid < lat.nodes.size() && !between; ++mid)
        between = strict_subset(lat.nodes[lo].extent, lat.nodes[mid].extent) &&
                  strict_subset(lat.nodes[mid].extent, lat.nodes[up].extent);
      if (!between) lat.covers.emplace_back(lo, up);
    }
  std::sort(lat.covers.begin(), lat.covers.end());
  return lat;
}

// ---- betweenness ----

using Adjacency = std::vector<std::set<std::size_t>>;

inline Adjacency random_graph(std::mt19937_64& rng, std::size_t max_nodes) {
  std::uniform_int_distribution<std::size_t> nn(1, max_nodes);
  std::size_t n = nn(rng);
  std::uniform_real_distribution<double> pd(0.02, 0.3), u(0.0, 1.0);
  double p = pd(rng);
  Adjacency adj(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (u(rng) < p) {
        adj[a].insert(b);
        adj[b].insert(a);
      }
  return adj;
}

/// Sum over unordered pairs {s, t} of the fraction of shortest s-t paths through v,
/// with path counts from per-source BFS and the product rule sigma_sv * sigma_vt.
inline std::vector<double> betweenness(const Adjacency& adj) {
  const std::size_t n = adj.size();
  const long inf = std::numeric_limits<long>::max();
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    d[s][s] = 0;
    sigma[s][s] = 1;
    q.push(s);
    std::vector<std::size_t> order;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      order.push_back(v);
      for (auto w : adj[v])
        if (d[s][w] == inf) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
    }
    for (auto v : order)
      for (auto w : adj[v])
        if (d[s][w] == d[s][v] + 1) sigma[s][w] += sigma[s][v];
  }
  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] == inf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t || d[s][v] == inf || d[v][t] == inf) continue;
        if (d[s][v] + d[v][t] == d[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  return bc;
}

// ---- exclusive clustering ----

struct Assignment {
  std::size_t candidate;
  double score;
  std::size_t triple_id;
};

/// scores[c][r]: candidate c against the archetype of rank r (0 = most specific).
/// Returns, per rank, the candidates it receives in presentation order.
inline std::vector<std::vector<Assignment>> cluster(const std::vector<std::vector<double>>& scores,
                                                    const std::vector<std::size_t>& triple_ids, double threshold) {
  std::size_t ranks = scores.empty() ? 0 : scores[0].size();
  std::vector<std::vector<Assignment>> out(ranks);
  for (std::size_t c = 0; c < scores.size(); ++c) {
    std::vector<std::size_t> passing;
    for (std::size_t r = 0; r < ranks; ++r)
      if (scores[c][r] >= threshold) passing.push_back(r);
    if (passing.empty()) continue;
    auto r = *std::min_element(passing.begin(), passing.end());
    out[r].push_back({c, scores[c][r], triple_ids[c]});
  }
  for (auto& v : out)
    std::sort(v.begin(), v.end(), [](const Assignment& a, const Assignment& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.triple_id != b.triple_id) return a.triple_id < b.triple_id;
      return a.candidate < b.candidate;
    });
  return out;
}

// ---- summary tree shape ----

/// Node count per level, leaves first, for a left-packed k-ary tree over n leaves.
inline std::vector<std::size_t> summary_levels(std::size_t n, std::size_t k) {
  std::vector<std::size_t> levels{n};
  do levels.push_back((levels.back() + k - 1) / k);
  while (levels.back() > 1);
  return levels;
}

}  // namespace oracle
