#pragma once

// Structured (JSON) reports for the command-line tool. Keys are emitted in
// insertion order so output is stable byte-for-byte.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphsplice/analysis.hpp"
#include "graphsplice/canonical.hpp"
#include "graphsplice/cutting.hpp"
#include "graphsplice/graph.hpp"
#include "graphsplice/language.hpp"
#include "graphsplice/splicing.hpp"

namespace graphsplice {

using json = nlohmann::ordered_json;

inline json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

inline json graph_json(const PlfGraph& g) {
  return json{{"order", g.order()}, {"size", g.size()}, {"simple", g.is_simple()}, {"edges", edges_json(g.edges())}};
}

inline json fragment_json(const Fragment& f) {
  json vertices = json::array();
  for (Vertex v = f.first; v <= f.last; ++v) vertices.push_back(v);
  json hanging = json::array();
  for (const auto& h : f.hanging) {
    hanging.push_back(json{{"edge", to_string(h)}, {"anchor", h.anchor}, {"instance", h.instance}});
  }
  return json{{"vertices", vertices},
              {"half_vertex", f.half_vertex ? json(*f.half_vertex) : json(nullptr)},
              {"intact", edges_json(f.intact)},
              {"hanging", hanging}};
}

/// Cut report; the degree-formula powers are included for non-reflexive rules.
inline json cut_json(const PlfGraph& g, const CutResult& r) {
  json out{{"rule", r.rule.str()},
           {"reflexive", r.rule.reflexive()},
           {"power", r.power()},
           {"ecut", edges_json(r.ecut)},
           {"vcut", r.vcut ? json::array({*r.vcut}) : json::array()}};
  if (!r.rule.reflexive()) {
    out["power_by_formula"] = power_by_formula(g, r.rule);
    out["power_by_right_formula"] = power_by_right_formula(g, r.rule);
  }
  out["prefix"] = fragment_json(r.prefix);
  out["suffix"] = fragment_json(r.suffix);
  return out;
}

inline json product_json(const SpliceProduct& p) {
  return json{{"direction", to_string(p.direction)},
              {"rule", p.rule.str()},
              {"bijection", p.bijection},
              {"graph", graph_json(p.graph)}};
}

inline json language_json(const LanguageResult& r) {
  json classes = json::array();
  // Sorted by first appearance, then by canonical form.
  std::vector<const std::pair<const CanonicalForm, ClassEntry>*> order;
  for (const auto& entry : r.classes) order.push_back(&entry);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->second.iteration < b->second.iteration; });
  for (const auto* entry : order) {
    classes.push_back(json{{"iteration", entry->second.iteration},
                           {"canonical", entry->first.str()},
                           {"graph", graph_json(entry->second.representative)}});
  }
  json trace = json::array();
  for (const auto& t : r.trace) {
    trace.push_back(json{{"iteration", t.iteration},
                         {"inputs", t.inputs},
                         {"raw_products", t.raw_products},
                         {"new_classes", t.new_classes}});
  }
  return json{{"class_count", r.classes.size()}, {"saturated", r.saturated}, {"trace", trace}, {"classes", classes}};
}

/// `max_listed` bounds the violation and exception lists; counts are always
/// complete.
inline json theorem_json(const TheoremReport& r, std::size_t max_listed = 25) {
  json violations = json::array();
  for (std::size_t k = 0; k < r.violations.size() && k < max_listed; ++k) {
    const auto& v = r.violations[k];
    violations.push_back(json{{"instance", v.instance}, {"expected", v.expected}, {"observed", v.observed}});
  }
  json exceptions = json::array();
  for (std::size_t k = 0; k < r.exceptions.size() && k < max_listed; ++k) exceptions.push_back(r.exceptions[k]);
  json tallies = json::object();
  for (const auto& [key, value] : r.tallies) tallies[key] = value;
  return json{{"id", r.id},
              {"claim", r.claim},
              {"status", to_string(r.status())},
              {"instances_checked", r.instances_checked},
              {"violation_count", r.violation_count},
              {"violations", violations},
              {"exception_count", r.exception_count},
              {"exceptions", exceptions},
              {"tallies", tallies}};
}

}  // namespace graphsplice
