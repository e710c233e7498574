#pragma once

// Graph splicing systems and their (bounded) iterated languages.
//
// Axioms are available in unlimited supply, and so is every graph generated
// from them, so each round splices every ordered pair of known classes
// (including a class with itself) under every rule. Results are kept as
// isomorphism classes.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "graphsplice/canonical.hpp"
#include "graphsplice/cutting.hpp"
#include "graphsplice/error.hpp"
#include "graphsplice/graph.hpp"
#include "graphsplice/splicing.hpp"

namespace graphsplice {

struct SplicingSystem {
  std::vector<PlfGraph> axioms;
  std::vector<SplicingRule> rules;
};

struct LanguageConfig {
  std::size_t max_iterations = 8;
  /// Larger products are recorded as classes but never spliced again.
  std::size_t max_order = 8;
};

struct ClassEntry {
  PlfGraph representative;
  std::size_t iteration = 0;  // round in which the class first appeared
};

struct IterationStats {
  std::size_t iteration = 0;
  std::size_t inputs = 0;
  std::size_t raw_products = 0;
  std::size_t new_classes = 0;
};

struct LanguageResult {
  std::map<CanonicalForm, ClassEntry> classes;
  std::vector<IterationStats> trace;
  /// True when a round added no class that could be spliced further, i.e. the
  /// bounded closure reached a fixpoint before the iteration cap.
  bool saturated = false;

  std::size_t classes_at(std::size_t iteration) const {
    std::size_t n = 0;
    for (const auto& [form, entry] : classes) n += entry.iteration <= iteration ? 1 : 0;
    return n;
  }
};

inline void validate(const SplicingSystem& system) {
  if (system.axioms.empty()) throw invalid_system("splicing system has no axioms");
  if (system.rules.empty()) throw invalid_system("splicing system has no rules");
  for (std::size_t k = 0; k < system.axioms.size(); ++k) {
    if (!system.axioms[k].is_simple()) {
      throw invalid_system("axiom " + std::to_string(k + 1) + " is not a simple graph: " +
                           describe(system.axioms[k]));
    }
  }
}

struct StepResult {
  std::size_t raw_products = 0;
  std::map<CanonicalForm, PlfGraph> classes;
};

/// One application of sigma: every ordered pair of inputs under every rule.
/// Combinations where a rule does not fit or does not apply contribute
/// nothing.
inline StepResult sigma_step(std::span<const PlfGraph> inputs, std::span<const SplicingRule> rules) {
  StepResult step;
  std::set<PlfGraph> seen;  // exact duplicates skip canonicalization
  for (const auto& g : inputs) {
    for (const auto& h : inputs) {
      for (const auto& s : rules) {
        if (!valid_for(g, s.c1) || !valid_for(h, s.c2) || !applicable(g, h, s)) continue;
        for (auto& product : sigma_pair(g, h, s)) {
          ++step.raw_products;
          if (!seen.insert(product.graph).second) continue;
          auto form = canonical_form(product.graph);
          step.classes.try_emplace(std::move(form), std::move(product.graph));
        }
      }
    }
  }
  return step;
}

inline LanguageResult language(const SplicingSystem& system, const LanguageConfig& config) {
  validate(system);
  for (const auto& a : system.axioms) {
    if (a.order() > config.max_order) {
      throw invalid_system("max_order " + std::to_string(config.max_order) + " is below axiom order " +
                           std::to_string(a.order()));
    }
  }

  LanguageResult result;
  for (const auto& a : system.axioms) {
    result.classes.try_emplace(canonical_form(a), ClassEntry{a, 0});
  }

  for (std::size_t round = 1; round <= config.max_iterations; ++round) {
    std::vector<PlfGraph> inputs;
    for (const auto& [form, entry] : result.classes) {
      if (entry.representative.order() <= config.max_order) inputs.push_back(entry.representative);
    }
    auto step = sigma_step(inputs, system.rules);

    IterationStats stats{round, inputs.size(), step.raw_products, 0};
    bool grew_spliceable = false;
    for (auto& [form, graph] : step.classes) {
      const bool spliceable = graph.order() <= config.max_order;
      if (result.classes.try_emplace(form, ClassEntry{std::move(graph), round}).second) {
        ++stats.new_classes;
        grew_spliceable = grew_spliceable || spliceable;
      }
    }
    result.trace.push_back(stats);
    if (!grew_spliceable) {
      result.saturated = true;
      break;
    }
  }
  return result;
}

/// Bounded-closure membership, up to isomorphism.
inline bool contains(const LanguageResult& result, const PlfGraph& g) {
  if (g.order() > kCanonicalOrderCap) return false;
  return result.classes.contains(canonical_form(g));
}

}  // namespace graphsplice
