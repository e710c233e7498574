#pragma once

// Splicing rules and recombination.
//
// A rule (c1,c2) cuts G with c1 and H with c2. Prefix(G) joins Suffix(H)
// (first product) and Prefix(H) joins Suffix(G) (second product); each join
// pairs the m hanging edges of the prefix with those of the suffix through
// one of the m! bijections, so a rule of power m yields 2(m!) products.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graphsplice/cutting.hpp"
#include "graphsplice/error.hpp"
#include "graphsplice/graph.hpp"

namespace graphsplice {

struct SplicingRule {
  CuttingRule c1;
  CuttingRule c2;

  SplicingRule reversed() const noexcept { return {c2, c1}; }
  std::string str() const { return c1.str() + ":" + c2.str(); }

  friend constexpr auto operator<=>(const SplicingRule&, const SplicingRule&) = default;
};

enum class Direction : std::uint8_t {
  first,   // Prefix(G) + Suffix(H)
  second,  // Prefix(H) + Suffix(G)
};

inline const char* to_string(Direction d) noexcept { return d == Direction::first ? "first" : "second"; }

/// recombination[k] is the index of the suffix hanging edge joined to the
/// prefix's k-th hanging edge.
using Recombination = std::vector<std::size_t>;

struct SpliceProduct {
  PlfGraph graph;
  Direction direction = Direction::first;
  Recombination bijection;
  SplicingRule rule;
};

/// Both cuts must sever the same number of edges and split the same number of
/// vertices (so a reflexive rule only pairs with a reflexive rule). Throws
/// invalid_rule when a cutting rule does not fit its graph.
inline bool applicable(const PlfGraph& g, const PlfGraph& h, const SplicingRule& s) {
  require_valid(g, s.c1);
  require_valid(h, s.c2);
  return s.c1.reflexive() == s.c2.reflexive() && power(g, s.c1) == power(h, s.c2);
}

/// Position in the joined graph of suffix vertex w. The prefix keeps 1..p;
/// the suffix follows, sharing position p when both halves carry a split
/// vertex.
inline Vertex joined_position(const Fragment& prefix, const Fragment& suffix, Vertex w) noexcept {
  const Vertex base = prefix.last + (prefix.half_vertex ? 0 : 1);
  return base + (w - suffix.first);
}

inline std::size_t joined_order(const Fragment& prefix, const Fragment& suffix) noexcept {
  return prefix.vertex_count() + suffix.vertex_count() - (prefix.half_vertex ? 1 : 0);
}

inline bool is_permutation_of_size(const Recombination& r, std::size_t m) {
  if (r.size() != m) return false;
  std::vector<bool> hit(m, false);
  for (auto k : r) {
    if (k >= m || hit[k]) return false;
    hit[k] = true;
  }
  return true;
}

/// Joins a prefix with a suffix. Each pair (a,b] <-> [c,d) becomes one edge
/// from anchor a to the renumbered anchor d.
inline PlfGraph join(const Fragment& prefix, const Fragment& suffix, const Recombination& r) {
  if (prefix.kind != FragmentKind::prefix || suffix.kind != FragmentKind::suffix) {
    throw not_applicable("join expects a prefix followed by a suffix");
  }
  if (prefix.hanging.size() != suffix.hanging.size()) {
    throw not_applicable("hanging edge counts differ: " + std::to_string(prefix.hanging.size()) + " vs " +
                         std::to_string(suffix.hanging.size()));
  }
  if (prefix.half_vertex.has_value() != suffix.half_vertex.has_value()) {
    throw not_applicable("only one fragment carries a split vertex");
  }
  if (!is_permutation_of_size(r, prefix.hanging.size())) {
    throw not_applicable("recombination is not a bijection over " + std::to_string(prefix.hanging.size()) +
                         " hanging edges");
  }

  std::vector<Edge> edges;
  edges.reserve(prefix.intact.size() + suffix.intact.size() + r.size());
  edges.insert(edges.end(), prefix.intact.begin(), prefix.intact.end());
  for (const auto& e : suffix.intact) {
    edges.push_back({joined_position(prefix, suffix, e.u), joined_position(prefix, suffix, e.v)});
  }
  for (std::size_t k = 0; k < r.size(); ++k) {
    edges.push_back({prefix.hanging[k].anchor, joined_position(prefix, suffix, suffix.hanging[r[k]].anchor)});
  }
  return PlfGraph(joined_order(prefix, suffix), std::move(edges));
}

/// All m! joins, bijections in lexicographic order starting from identity.
inline std::vector<SpliceProduct> recombine_all(const Fragment& prefix, const Fragment& suffix, Direction direction,
                                                const SplicingRule& rule) {
  Recombination r(prefix.hanging.size());
  std::iota(r.begin(), r.end(), std::size_t{0});
  std::vector<SpliceProduct> out;
  do {
    out.push_back({join(prefix, suffix, r), direction, r, rule});
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

namespace detail {

inline void require_applicable(const PlfGraph& g, const PlfGraph& h, const SplicingRule& s) {
  if (!applicable(g, h, s)) {
    throw not_applicable("splicing rule " + s.str() + " does not apply: powers " + std::to_string(power(g, s.c1)) +
                         " and " + std::to_string(power(h, s.c2)) + (s.c1.reflexive() == s.c2.reflexive()
                                                                        ? ""
                                                                        : ", reflexive with non-reflexive"));
  }
}

}  // namespace detail

/// Prefix(G cut c1) joined with Suffix(H cut c2), every bijection.
inline std::vector<SpliceProduct> products_first(const PlfGraph& g, const PlfGraph& h, const SplicingRule& s) {
  detail::require_applicable(g, h, s);
  return recombine_all(cut(g, s.c1).prefix, cut(h, s.c2).suffix, Direction::first, s);
}

/// Prefix(H cut c2) joined with Suffix(G cut c1), every bijection.
inline std::vector<SpliceProduct> products_second(const PlfGraph& g, const PlfGraph& h, const SplicingRule& s) {
  detail::require_applicable(g, h, s);
  return recombine_all(cut(h, s.c2).prefix, cut(g, s.c1).suffix, Direction::second, s);
}

/// First products followed by second products; 2(m!) entries, duplicates kept.
inline std::vector<SpliceProduct> sigma_pair(const PlfGraph& g, const PlfGraph& h, const SplicingRule& s) {
  auto out = products_first(g, h, s);
  auto second = products_second(g, h, s);
  out.insert(out.end(), std::make_move_iterator(second.begin()), std::make_move_iterator(second.end()));
  return out;
}

}  // namespace graphsplice
