#pragma once

// Ordered multigraphs in pseudo-linear form (PLF): vertex k is the k-th
// vertex of the ordering, so vertices and positions coincide (1..order).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphsplice/error.hpp"

namespace graphsplice {

using Vertex = std::size_t;

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds a normalized edge; throws invalid_graph on a loop.
inline Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw invalid_graph("loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Immutable multigraph on positions 1..order. The edge multiset is kept as a
/// sorted vector, so equal graphs compare equal element-wise and iteration
/// order is deterministic.
class PlfGraph {
 public:
  PlfGraph() = default;

  PlfGraph(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      e = make_edge(e.u, e.v);
      if (e.u < 1 || e.v > order_) {
        throw invalid_graph("edge " + to_string(e) + " outside positions 1.." + std::to_string(order_));
      }
    }
    std::sort(edges_.begin(), edges_.end());
  }

  std::size_t order() const noexcept { return order_; }
  /// Number of edge instances (multiplicities summed).
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t multiplicity(Vertex a, Vertex b) const {
    if (a == b) return 0;
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    const auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
    return static_cast<std::size_t>(hi - lo);
  }

  bool is_simple() const noexcept {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
  }

  friend bool operator==(const PlfGraph&, const PlfGraph&) = default;
  friend auto operator<=>(const PlfGraph&, const PlfGraph&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
};

/// "order=3 edges=[(1,2),(1,3),(2,3)]" -- used in reports and diagnostics.
inline std::string describe(const PlfGraph& g) {
  std::string out = "order=" + std::to_string(g.order()) + " edges=[";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) out += ",";
    out += to_string(e);
    first = false;
  }
  return out + "]";
}

/// A permutation of source labels 1..n: position p (1-based) holds
/// labels[p-1].
struct Ordering {
  std::vector<Vertex> labels;
};

/// Redraws a labelled graph in PLF: each source label is renamed to its rank
/// in the ordering.
inline PlfGraph to_plf(std::size_t source_order, std::span<const Edge> source_edges, const Ordering& ordering) {
  if (ordering.labels.size() != source_order) {
    throw invalid_graph("ordering has " + std::to_string(ordering.labels.size()) + " entries, expected " +
                        std::to_string(source_order));
  }
  std::vector<Vertex> rank(source_order + 1, 0);
  for (std::size_t p = 0; p < ordering.labels.size(); ++p) {
    const Vertex label = ordering.labels[p];
    if (label < 1 || label > source_order || rank[label] != 0) {
      throw invalid_graph("ordering is not a permutation of 1.." + std::to_string(source_order));
    }
    rank[label] = p + 1;
  }
  std::vector<Edge> edges;
  edges.reserve(source_edges.size());
  for (const auto& e : source_edges) {
    if (e.u < 1 || e.u > source_order || e.v < 1 || e.v > source_order) {
      throw invalid_graph("edge " + to_string(e) + " has an endpoint outside the label set");
    }
    edges.push_back(make_edge(rank[e.u], rank[e.v]));
  }
  return PlfGraph(source_order, std::move(edges));
}

// ---------------------------------------------------------------- degrees

inline void require_vertex(const PlfGraph& g, Vertex v) {
  if (v < 1 || v > g.order()) {
    throw invalid_graph("vertex " + std::to_string(v) + " outside positions 1.." + std::to_string(g.order()));
  }
}

/// Edge instances at v whose other endpoint lies to the left of v.
inline std::size_t left_degree(const PlfGraph& g, Vertex v) {
  require_vertex(g, v);
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [v](const Edge& e) { return e.v == v; }));
}

/// Edge instances at v whose other endpoint lies to the right of v.
inline std::size_t right_degree(const PlfGraph& g, Vertex v) {
  require_vertex(g, v);
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [v](const Edge& e) { return e.u == v; }));
}

inline std::size_t degree(const PlfGraph& g, Vertex v) { return left_degree(g, v) + right_degree(g, v); }

struct VertexDegrees {
  std::size_t ld = 0;
  std::size_t rd = 0;

  std::size_t total() const noexcept { return ld + rd; }
};

/// Left/right degrees of every vertex, computed in one pass.
class DegreeProfile {
 public:
  explicit DegreeProfile(const PlfGraph& g) : degrees_(g.order()) {
    for (const auto& e : g.edges()) {
      ++degrees_[e.u - 1].rd;
      ++degrees_[e.v - 1].ld;
    }
  }

  std::size_t order() const noexcept { return degrees_.size(); }
  const VertexDegrees& at(Vertex v) const { return degrees_.at(v - 1); }
  std::size_t ld(Vertex v) const { return at(v).ld; }
  std::size_t rd(Vertex v) const { return at(v).rd; }
  std::size_t d(Vertex v) const { return at(v).total(); }

 private:
  std::vector<VertexDegrees> degrees_;
};

// ------------------------------------------------------------- generators

inline PlfGraph path(std::size_t n) {
  if (n < 1) throw invalid_graph("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return PlfGraph(n, std::move(edges));
}

inline PlfGraph cycle(std::size_t n) {
  if (n < 3) throw invalid_graph("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return PlfGraph(n, std::move(edges));
}

inline PlfGraph complete(std::size_t n) {
  if (n < 1) throw invalid_graph("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  return PlfGraph(n, std::move(edges));
}

/// Parts laid out contiguously: 1..a and a+1..a+b.
inline PlfGraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw invalid_graph("complete bipartite graph needs both parts >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= a; ++i) {
    for (Vertex j = a + 1; j <= a + b; ++j) edges.push_back({i, j});
  }
  return PlfGraph(a + b, std::move(edges));
}

}  // namespace graphsplice
