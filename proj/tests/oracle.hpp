#pragma once

// Brute-force references used only by the tests. None of these call into the
// cutting, splicing or canonicalization code they are compared against.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "graphsplice/graph.hpp"

namespace oracle {

using graphsplice::Edge;
using graphsplice::PlfGraph;
using graphsplice::Vertex;

using Multiset = std::map<std::pair<Vertex, Vertex>, std::size_t>;

inline Multiset multiset(const PlfGraph& g) {
  Multiset m;
  for (const auto& e : g.edges()) ++m[{e.u, e.v}];
  return m;
}

/// Isomorphism by backtracking over vertex maps, checking every pair's
/// multiplicity as soon as both ends are mapped.
inline bool isomorphic(const PlfGraph& a, const PlfGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const std::size_t n = a.order();
  std::vector<std::vector<std::size_t>> ma(n + 1, std::vector<std::size_t>(n + 1, 0));
  auto mb = ma;
  for (const auto& e : a.edges()) ++ma[e.u][e.v], ++ma[e.v][e.u];
  for (const auto& e : b.edges()) ++mb[e.u][e.v], ++mb[e.v][e.u];
  std::vector<Vertex> image(n + 1, 0);
  std::vector<bool> taken(n + 1, false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v > n) return true;
    for (Vertex w = 1; w <= n; ++w) {
      if (taken[w]) continue;
      bool ok = true;
      for (Vertex x = 1; x < v && ok; ++x) ok = ma[v][x] == mb[w][image[x]];
      if (!ok) continue;
      taken[w] = true;
      image[v] = w;
      if (self(self, v + 1)) return true;
      taken[w] = false;
    }
    return false;
  };
  return extend(extend, 1);
}

/// Severed edges of [i,j] read straight off the four-item list: the edge
/// (i,j); edges (i,v) with v right of j; edges (v,j) with v left of j; edges
/// (u,v) with u left of i and v right of j. Reflexive [i,i]: edges (u,v) with
/// u left of i and v right of i.
inline std::vector<Edge> ecut_by_list(const PlfGraph& g, Vertex i, Vertex j) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    bool cut = false;
    if (i == j) {
      cut = e.u < i && e.v > i;
    } else {
      cut = (e.u == i && e.v == j) || (e.u == i && e.v > j) || (e.v == j && e.u < j && e.u != i) ||
            (e.u < i && e.v > j);
    }
    if (cut) out.push_back(e);
  }
  return out;
}

/// Applies a uniformly random relabelling.
inline PlfGraph shuffle(const PlfGraph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
  return PlfGraph(g.order(), std::move(edges));
}

/// Random multigraph: each pair gets multiplicity 0..max_mult.
inline PlfGraph random_graph(std::size_t n, std::mt19937& rng, std::size_t max_mult = 1, double density = 0.5) {
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<std::size_t> mult(1, max_mult);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (!present(rng)) continue;
      for (std::size_t k = mult(rng); k > 0; --k) edges.push_back({u, v});
    }
  }
  return PlfGraph(n, std::move(edges));
}

inline PlfGraph graph(std::size_t order, std::vector<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back(graphsplice::make_edge(u, v));
  return PlfGraph(order, std::move(edges));
}

}  // namespace oracle
