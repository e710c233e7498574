// Splices a triangle with a square, then grows the bounded language of the
// pair under the same rule and prints one line per class.

#include <iostream>

#include "graphsplice/canonical.hpp"
#include "graphsplice/language.hpp"
#include "graphsplice/splicing.hpp"

namespace gs = graphsplice;

int main() {
  const gs::SplicingRule rule{{1, 2}, {2, 3}};
  for (const auto& p : gs::sigma_pair(gs::cycle(3), gs::cycle(4), rule)) {
    std::cout << gs::to_string(p.direction) << " " << gs::describe(p.graph) << "\n";
  }

  const auto result = gs::language({{gs::cycle(3), gs::cycle(4)}, {rule}}, {.max_iterations = 2, .max_order = 6});
  std::cout << result.classes.size() << " classes" << (result.saturated ? " (saturated)" : "") << "\n";
  for (const auto& [form, entry] : result.classes) {
    std::cout << "  round " << entry.iteration << ": " << gs::describe(entry.representative) << "\n";
  }
}
