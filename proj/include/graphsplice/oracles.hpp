#pragma once

// Independent graph-theoretic oracles and exhaustive enumeration of small
// simple graphs.

#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "graphsplice/error.hpp"
#include "graphsplice/graph.hpp"

namespace graphsplice {

namespace detail {

// Incidence lists keyed by edge instance, so parallel edges stay distinct.
inline std::vector<std::vector<std::pair<Vertex, std::size_t>>> incidence(const PlfGraph& g) {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(g.order() + 1);
  std::size_t id = 0;
  for (const auto& e : g.edges()) {
    adj[e.u].emplace_back(e.v, id);
    adj[e.v].emplace_back(e.u, id);
    ++id;
  }
  return adj;
}

}  // namespace detail

/// Depth-first search; reaching a visited vertex over any edge instance other
/// than the one used to enter the current vertex closes a cycle. A repeated
/// edge therefore counts as a cycle of length 2.
inline bool has_cycle(const PlfGraph& g) {
  const auto adj = detail::incidence(g);
  constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);
  std::vector<bool> seen(g.order() + 1, false);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (seen[root]) continue;
    // (vertex, edge instance used to enter it)
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, kNoEdge}};
    seen[root] = true;
    while (!stack.empty()) {
      const auto [v, via] = stack.back();
      stack.pop_back();
      for (const auto& [w, id] : adj[v]) {
        if (id == via) continue;
        if (seen[w]) return true;
        seen[w] = true;
        stack.emplace_back(w, id);
      }
    }
  }
  return false;
}

/// Two-colouring by breadth-first search. Parallel edges do not affect the
/// outcome.
inline bool is_bipartite(const PlfGraph& g) {
  const auto adj = detail::incidence(g);
  std::vector<int> colour(g.order() + 1, -1);
  std::vector<Vertex> queue;
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (const auto& [w, id] : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Common degree (with multiplicity) when every vertex has the same degree;
/// empty for irregular graphs and for the graph with no vertices.
inline std::optional<std::size_t> is_regular(const PlfGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const DegreeProfile profile(g);
  const std::size_t d = profile.d(1);
  for (Vertex v = 2; v <= g.order(); ++v) {
    if (profile.d(v) != d) return std::nullopt;
  }
  return d;
}

// ------------------------------------------------------------ enumeration

inline constexpr std::size_t kEnumerationCap = 6;

/// All 2^C(n,2) labelled simple graphs on positions 1..n. Graph number `mask`
/// contains the k-th pair of (1,2),(1,3),...,(n-1,n) iff bit k of mask is set,
/// so the stream order is fixed.
class SimpleGraphRange {
 public:
  explicit SimpleGraphRange(std::size_t n, std::size_t cap = kEnumerationCap) : n_(n) {
    if (n > cap) {
      throw cap_exceeded("enumeration capped at order " + std::to_string(cap) + ", got " + std::to_string(n));
    }
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) pairs_.push_back({u, v});
    }
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PlfGraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const SimpleGraphRange* range, std::uint64_t mask) : range_(range), mask_(mask) {}

    PlfGraph operator*() const { return range_->graph(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const SimpleGraphRange* range_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }
  std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }

  PlfGraph graph(std::uint64_t mask) const {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(pairs_[k]);
    }
    return PlfGraph(n_, std::move(edges));
  }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
};

inline SimpleGraphRange enumerate_simple_graphs(std::size_t n, std::size_t cap = kEnumerationCap) {
  return SimpleGraphRange(n, cap);
}

}  // namespace graphsplice
