#pragma once

// Text formats.
//
// Graph file (one directive per line, '#' starts a comment):
//   plfg 1
//   order 3
//   edge 1 2
//   edge 2 3
//
// System file:
//   plfs 1
//   max-iterations 4
//   max-order 8
//   axiom cycle 3            # or: path N | complete N | bipartite A B
//   axiom graph 2 1-2 1-2    # inline: order, then U-V pairs
//   rule 1,2:2,3

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphsplice/cutting.hpp"
#include "graphsplice/error.hpp"
#include "graphsplice/graph.hpp"
#include "graphsplice/language.hpp"
#include "graphsplice/splicing.hpp"

namespace graphsplice {

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) words.push_back(line.substr(start, k - start));
  }
  return words;
}

inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::optional<std::size_t> to_count(std::string_view word) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

inline std::size_t count_or_throw(std::string_view word, std::size_t line, std::string_view what) {
  const auto value = to_count(word);
  if (!value) {
    throw parse_error(line, std::string(what) + " must be a non-negative integer, got '" + std::string(word) + "'");
  }
  return *value;
}

// Visits (line number, words) for every non-blank line.
template <typename Fn>
void for_each_directive(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    const auto words = split_words(strip_comment(line));
    if (!words.empty()) fn(line_no, words);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace detail

// ------------------------------------------------------------------ graphs

inline PlfGraph parse_graph(std::string_view text) {
  bool header = false;
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  detail::for_each_directive(text, [&](std::size_t line, const std::vector<std::string_view>& w) {
    if (!header) {
      if (w.size() != 2 || w[0] != "plfg" || w[1] != "1") throw parse_error(line, "expected header 'plfg 1'");
      header = true;
      return;
    }
    if (w[0] == "order") {
      if (w.size() != 2) throw parse_error(line, "'order' takes one argument");
      if (order) throw parse_error(line, "duplicate 'order'");
      if (!w[1].empty() && w[1][0] == '-') throw parse_error(line, "order must not be negative");
      order = detail::count_or_throw(w[1], line, "order");
    } else if (w[0] == "edge") {
      if (w.size() != 3) throw parse_error(line, "'edge' takes two endpoints");
      if (!order) throw parse_error(line, "'edge' before 'order'");
      const auto u = detail::count_or_throw(w[1], line, "endpoint");
      const auto v = detail::count_or_throw(w[2], line, "endpoint");
      if (u == v) throw parse_error(line, "loop at vertex " + std::to_string(u));
      if (u < 1 || v < 1 || u > *order || v > *order) {
        throw parse_error(line, "endpoint outside positions 1.." + std::to_string(*order));
      }
      edges.push_back(make_edge(u, v));
    } else {
      throw parse_error(line, "unknown directive '" + std::string(w[0]) + "'");
    }
  });
  if (!header) throw parse_error(0, "empty graph file");
  if (!order) throw parse_error(0, "missing 'order'");
  return PlfGraph(*order, std::move(edges));
}

inline std::string write_graph(const PlfGraph& g) {
  std::string out = "plfg 1\norder " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Graphviz DOT with vertex k pinned at abscissa k (neato -n honours pos).
inline std::string export_dot(const PlfGraph& g, std::string_view name = "plf") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  layout=neato;\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 1; v <= g.order(); ++v) out << "  " << v << " [pos=\"" << v << ",0!\"];\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

// ------------------------------------------------------------------- rules

/// "I,J" or "[I,J]".
inline CuttingRule parse_cutting_rule(std::string_view text, std::size_t line = 0) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw parse_error(line, "cutting rule must look like I,J, got '" + std::string(text) + "'");
  }
  const auto i = detail::count_or_throw(text.substr(0, comma), line, "rule position");
  const auto j = detail::count_or_throw(text.substr(comma + 1), line, "rule position");
  if (i < 1 || i > j || j - i > 1) {
    throw parse_error(line, "cutting rule [" + std::to_string(i) + "," + std::to_string(j) +
                                "] needs 0 < I <= J <= I+1");
  }
  return {i, j};
}

/// "I,J:K,L".
inline SplicingRule parse_splicing_rule(std::string_view text, std::size_t line = 0) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw parse_error(line, "splicing rule must look like I,J:K,L, got '" + std::string(text) + "'");
  }
  return {parse_cutting_rule(text.substr(0, colon), line), parse_cutting_rule(text.substr(colon + 1), line)};
}

// ------------------------------------------------------------------ systems

struct SystemFile {
  SplicingSystem system;
  LanguageConfig config;
};

namespace detail {

inline PlfGraph parse_axiom(const std::vector<std::string_view>& w, std::size_t line) {
  if (w.size() < 2) throw parse_error(line, "'axiom' needs a kind");
  auto arg = [&](std::size_t k) {
    if (w.size() <= k) throw parse_error(line, "'axiom " + std::string(w[1]) + "' is missing an argument");
    return count_or_throw(w[k], line, "axiom parameter");
  };
  auto expect_args = [&](std::size_t n) {
    if (w.size() != n + 2) throw parse_error(line, "'axiom " + std::string(w[1]) + "' takes " + std::to_string(n) + " argument(s)");
  };
  try {
    if (w[1] == "cycle") {
      expect_args(1);
      return cycle(arg(2));
    }
    if (w[1] == "path") {
      expect_args(1);
      return path(arg(2));
    }
    if (w[1] == "complete") {
      expect_args(1);
      return complete(arg(2));
    }
    if (w[1] == "bipartite") {
      expect_args(2);
      return complete_bipartite(arg(2), arg(3));
    }
    if (w[1] == "graph") {
      const auto order = arg(2);
      std::vector<Edge> edges;
      for (std::size_t k = 3; k < w.size(); ++k) {
        const auto dash = w[k].find('-');
        if (dash == std::string_view::npos) throw parse_error(line, "edge must look like U-V, got '" + std::string(w[k]) + "'");
        const auto u = count_or_throw(w[k].substr(0, dash), line, "endpoint");
        const auto v = count_or_throw(w[k].substr(dash + 1), line, "endpoint");
        edges.push_back({u, v});
      }
      return PlfGraph(order, std::move(edges));
    }
  } catch (const invalid_graph& e) {
    throw parse_error(line, e.what());
  }
  throw parse_error(line, "unknown axiom kind '" + std::string(w[1]) + "'");
}

}  // namespace detail

inline SystemFile parse_system(std::string_view text) {
  SystemFile file;
  bool header = false;
  detail::for_each_directive(text, [&](std::size_t line, const std::vector<std::string_view>& w) {
    if (!header) {
      if (w.size() != 2 || w[0] != "plfs" || w[1] != "1") throw parse_error(line, "expected header 'plfs 1'");
      header = true;
      return;
    }
    if (w[0] == "axiom") {
      file.system.axioms.push_back(detail::parse_axiom(w, line));
    } else if (w[0] == "rule") {
      if (w.size() != 2) throw parse_error(line, "'rule' takes one argument I,J:K,L");
      file.system.rules.push_back(parse_splicing_rule(w[1], line));
    } else if (w[0] == "max-iterations") {
      if (w.size() != 2) throw parse_error(line, "'max-iterations' takes one argument");
      file.config.max_iterations = detail::count_or_throw(w[1], line, "max-iterations");
    } else if (w[0] == "max-order") {
      if (w.size() != 2) throw parse_error(line, "'max-order' takes one argument");
      file.config.max_order = detail::count_or_throw(w[1], line, "max-order");
    } else {
      throw parse_error(line, "unknown directive '" + std::string(w[0]) + "'");
    }
  });
  if (!header) throw parse_error(0, "empty system file");
  return file;
}

}  // namespace graphsplice
