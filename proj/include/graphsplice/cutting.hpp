#pragma once

// Cutting rules and the cut scheme.
//
// A non-reflexive rule [i,i+1] severs every edge instance (u,v) with
// u <= i < v; a reflexive rule [i,i] splits vertex i into two halves and
// severs every instance with u < i < v. Edges incident to a split vertex are
// never severed: left-incident ones stay with the prefix, right-incident ones
// with the suffix.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphsplice/error.hpp"
#include "graphsplice/graph.hpp"

namespace graphsplice {

struct CuttingRule {
  Vertex i = 1;
  Vertex j = 1;

  bool reflexive() const noexcept { return i == j; }
  std::string str() const { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

  friend constexpr auto operator<=>(const CuttingRule&, const CuttingRule&) = default;
};

inline bool valid_for(const PlfGraph& g, const CuttingRule& c) noexcept {
  return c.i >= 1 && c.i <= c.j && c.j <= g.order() && c.j - c.i <= 1;
}

inline void require_valid(const PlfGraph& g, const CuttingRule& c) {
  if (!valid_for(g, c)) {
    throw invalid_rule("cutting rule " + c.str() + " is not valid for a graph of order " + std::to_string(g.order()));
  }
}

/// Every rule valid for a graph of the given order: [1,1],[1,2],[2,2],...
inline std::vector<CuttingRule> all_rules(std::size_t order) {
  std::vector<CuttingRule> rules;
  for (Vertex i = 1; i <= order; ++i) {
    rules.push_back({i, i});
    if (i < order) rules.push_back({i, i + 1});
  }
  return rules;
}

/// Whether the edge instance is severed by c.
inline bool severs(const CuttingRule& c, const Edge& e) noexcept {
  return c.reflexive() ? (e.u < c.i && c.i < e.v) : (e.u <= c.i && e.v >= c.j);
}

enum class Side : std::uint8_t {
  left_part,   // (u,v] -- kept by a prefix, anchored at u
  right_part,  // [u,v) -- kept by a suffix, anchored at v
};

struct HangingEdge {
  Vertex anchor = 0;
  Edge origin;
  std::size_t instance = 0;  // which copy of a repeated pair
  Side side = Side::left_part;

  friend constexpr auto operator<=>(const HangingEdge&, const HangingEdge&) = default;
};

inline std::string to_string(const HangingEdge& h) {
  const auto u = std::to_string(h.origin.u);
  const auto v = std::to_string(h.origin.v);
  return h.side == Side::left_part ? "(" + u + "," + v + "]" : "[" + u + "," + v + ")";
}

enum class FragmentKind : std::uint8_t { prefix, suffix };

/// Half of a cut graph. Positions keep their original numbering; retained
/// vertices are the contiguous interval first..last.
struct Fragment {
  FragmentKind kind = FragmentKind::prefix;
  Vertex first = 1;
  Vertex last = 0;
  std::vector<Edge> intact;
  std::vector<HangingEdge> hanging;  // sorted by (origin, instance)
  std::optional<Vertex> half_vertex;

  std::size_t vertex_count() const noexcept { return last + 1 - first; }
  bool contains(Vertex v) const noexcept { return v >= first && v <= last; }
};

struct CutResult {
  CuttingRule rule;
  Fragment prefix;
  Fragment suffix;
  std::vector<Edge> ecut;
  std::optional<Vertex> vcut;

  std::size_t power() const noexcept { return ecut.size(); }
};

/// Severed edge instances, sorted.
inline std::vector<Edge> ecut(const PlfGraph& g, const CuttingRule& c) {
  require_valid(g, c);
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (severs(c, e)) out.push_back(e);
  }
  return out;
}

inline std::optional<Vertex> vcut(const PlfGraph& g, const CuttingRule& c) {
  require_valid(g, c);
  return c.reflexive() ? std::optional<Vertex>(c.i) : std::nullopt;
}

inline std::size_t power(const PlfGraph& g, const CuttingRule& c) {
  require_valid(g, c);
  std::size_t n = 0;
  for (const auto& e : g.edges()) n += severs(c, e) ? 1 : 0;
  return n;
}

namespace detail {

inline void require_non_reflexive(const PlfGraph& g, const CuttingRule& c) {
  require_valid(g, c);
  if (c.reflexive()) {
    throw invalid_rule("degree formula for power applies only to non-reflexive rules, got " + c.str());
  }
}

}  // namespace detail

/// Power of [i,i+1] from degrees alone:
///   rd(i) - ld(i) + sum over v < i of (rd(v) - ld(v)).
inline std::size_t power_by_formula(const PlfGraph& g, const CuttingRule& c) {
  detail::require_non_reflexive(g, c);
  const DegreeProfile p(g);
  std::int64_t total = 0;
  for (Vertex v = 1; v <= c.i; ++v) {
    total += static_cast<std::int64_t>(p.rd(v)) - static_cast<std::int64_t>(p.ld(v));
  }
  return static_cast<std::size_t>(total);
}

/// The mirror expression counted from the right:
///   ld(j) - rd(j) + sum over v > j of (ld(v) - rd(v)).
inline std::size_t power_by_right_formula(const PlfGraph& g, const CuttingRule& c) {
  detail::require_non_reflexive(g, c);
  const DegreeProfile p(g);
  std::int64_t total = 0;
  for (Vertex v = c.j; v <= g.order(); ++v) {
    total += static_cast<std::int64_t>(p.ld(v)) - static_cast<std::int64_t>(p.rd(v));
  }
  return static_cast<std::size_t>(total);
}

inline CutResult cut(const PlfGraph& g, const CuttingRule& c) {
  require_valid(g, c);
  CutResult r;
  r.rule = c;
  r.vcut = vcut(g, c);

  r.prefix.kind = FragmentKind::prefix;
  r.prefix.first = 1;
  r.prefix.last = c.i;
  r.suffix.kind = FragmentKind::suffix;
  r.suffix.first = c.j;
  r.suffix.last = g.order();
  if (c.reflexive()) {
    r.prefix.half_vertex = c.i;
    r.suffix.half_vertex = c.i;
  }

  const auto edges = g.edges();
  std::size_t instance = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    instance = (k > 0 && edges[k - 1] == e) ? instance + 1 : 0;
    if (severs(c, e)) {
      r.ecut.push_back(e);
      r.prefix.hanging.push_back({e.u, e, instance, Side::left_part});
      r.suffix.hanging.push_back({e.v, e, instance, Side::right_part});
    } else if (e.v <= r.prefix.last) {
      r.prefix.intact.push_back(e);
    } else {
      r.suffix.intact.push_back(e);
    }
  }
  return r;
}

}  // namespace graphsplice
