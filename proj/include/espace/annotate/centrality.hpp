#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "espace/kg/graph.hpp"

namespace espace::annotate {

/// Undirected simple graph over dense vertex ids.
struct Graph {
  std::vector<std::vector<std::size_t>> adj;  // sorted, no self loops or duplicates

  explicit Graph(std::size_t n = 0) : adj(n) {}

  std::size_t size() const { return adj.size(); }

  void add_edge(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto put = [](std::vector<std::size_t>& v, std::size_t x) {
      auto it = std::lower_bound(v.begin(), v.end(), x);
      if (it == v.end() || *it != x) v.insert(it, x);
    };
    put(adj[a], b);
    put(adj[b], a);
  }
};

struct BetweennessOptions {
  // 0 = exact; otherwise the number of sampled source vertices, scaled up by n / samples
  std::size_t samples = 0;
  std::uint64_t seed = 1;
};

/// Brandes' accumulation over BFS shortest paths. Values are unnormalized and count each
/// unordered pair once.
inline std::vector<double> betweenness(const Graph& g, const BetweennessOptions& opts = {}) {
  const std::size_t n = g.size();
  std::vector<double> bc(n, 0.0);
  std::vector<std::size_t> sources(n);
  for (std::size_t i = 0; i < n; ++i) sources[i] = i;
  double scale = 0.5;
  if (opts.samples > 0 && opts.samples < n) {
    std::mt19937_64 rng(opts.seed);
    std::shuffle(sources.begin(), sources.end(), rng);
    sources.resize(opts.samples);
    std::sort(sources.begin(), sources.end());
    scale *= static_cast<double>(n) / static_cast<double>(opts.samples);
  }

  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (auto s : sources) {
    for (std::size_t v = 0; v < n; ++v) {
      preds[v].clear();
      sigma[v] = 0.0;
      delta[v] = 0.0;
      dist[v] = -1;
    }
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      order.push_back(v);
      for (auto w : g.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto w = *it;
      for (auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  for (auto& x : bc) x *= scale;
  return bc;
}

using CentralityIndex = std::map<std::string, double>;

/// Concept graph: every concept is a vertex, every triple links its subject and object.
inline CentralityIndex compute_betweenness(const kg::KnowledgeGraph& graph, const BetweennessOptions& opts = {}) {
  std::map<std::string, std::size_t> id;
  for (const auto& [uri, c] : graph.concepts) id.emplace(uri, id.size());
  Graph g(id.size());
  for (const auto& t : graph.triples) g.add_edge(id.at(t.subject_uri), id.at(t.object_uri));
  auto bc = betweenness(g, opts);
  CentralityIndex out;
  for (const auto& [uri, i] : id) out.emplace(uri, bc[i]);
  return out;
}

}  // namespace espace::annotate
