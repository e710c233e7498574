#include <gtest/gtest.h>

#include <random>

#include "graphsplice/io.hpp"
#include "graphsplice/report.hpp"
#include "oracle.hpp"

namespace gs = graphsplice;
using oracle::graph;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    gs::parse_graph(text);
  } catch (const gs::parse_error& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(ParseGraph, Triangle) {
  EXPECT_EQ(gs::parse_graph("plfg 1\norder 3\nedge 1 2\nedge 2 3\nedge 1 3\n"), gs::cycle(3));
}

TEST(ParseGraph, MultiplicityAccumulates) {
  const auto g = gs::parse_graph("plfg 1\norder 2\nedge 1 2\nedge 1 2\n");
  EXPECT_EQ(g.multiplicity(1, 2), 2u);
}

TEST(ParseGraph, CommentsBlankLinesAndReversedEndpoints) {
  const auto g = gs::parse_graph("# a path\nplfg 1\n\norder 3   # three\nedge 2 1\n  edge 3 2\n");
  EXPECT_EQ(g, gs::path(3));
  EXPECT_EQ(gs::parse_graph("plfg 1\norder 0\n"), gs::PlfGraph());
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("plfg 1\norder 3\nedge 1 1\n"), 3u);
  EXPECT_EQ(error_line("plfg 1\norder 3\nedge 1 4\n"), 3u);
  EXPECT_EQ(error_line("plfg 1\norder -2\n"), 2u);
  EXPECT_EQ(error_line("plfg 1\nedge 1 2\norder 2\n"), 2u);
  EXPECT_EQ(error_line("plfg 2\n"), 1u);
  EXPECT_EQ(error_line("plfg 1\norder 2\nvertex 1\n"), 3u);
  EXPECT_EQ(error_line("plfg 1\norder x\n"), 2u);
  EXPECT_EQ(error_line("plfg 1\norder 2\norder 3\n"), 3u);
  EXPECT_EQ(error_line(""), 0u);
  EXPECT_EQ(error_line("plfg 1\n"), 0u);
}

TEST(WriteGraph, Normalizes) {
  const auto text = "plfg 1\norder 3\nedge 3 1\n# note\nedge 2 1\n";
  EXPECT_EQ(gs::write_graph(gs::parse_graph(text)), "plfg 1\norder 3\nedge 1 2\nedge 1 3\n");
}

TEST(WriteGraph, RoundTripOnMultigraphs) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(trial % 9, rng, 1 + trial % 3);
    const auto text = gs::write_graph(g);
    EXPECT_EQ(gs::parse_graph(text), g);
    EXPECT_EQ(gs::write_graph(gs::parse_graph(text)), text);
  }
}

TEST(ExportDot, PinsVerticesAtTheirPositions) {
  const auto dot = gs::export_dot(gs::cycle(3), "c3");
  EXPECT_EQ(dot,
            "graph c3 {\n"
            "  layout=neato;\n"
            "  node [shape=circle];\n"
            "  1 [pos=\"1,0!\"];\n"
            "  2 [pos=\"2,0!\"];\n"
            "  3 [pos=\"3,0!\"];\n"
            "  1 -- 2;\n"
            "  1 -- 3;\n"
            "  2 -- 3;\n"
            "}\n");
  const auto multi = gs::export_dot(graph(2, {{1, 2}, {1, 2}}));
  EXPECT_NE(multi.find("  1 -- 2;\n  1 -- 2;\n"), std::string::npos);
}

TEST(ParseRules, Forms) {
  EXPECT_EQ(gs::parse_cutting_rule("2,3"), (gs::CuttingRule{2, 3}));
  EXPECT_EQ(gs::parse_cutting_rule("[4,4]"), (gs::CuttingRule{4, 4}));
  EXPECT_EQ(gs::parse_splicing_rule("1,2:2,3"), (gs::SplicingRule{{1, 2}, {2, 3}}));
  EXPECT_EQ(gs::parse_splicing_rule("[1,1]:[3,3]"), (gs::SplicingRule{{1, 1}, {3, 3}}));
  EXPECT_THROW(gs::parse_cutting_rule("2;3"), gs::parse_error);
  EXPECT_THROW(gs::parse_splicing_rule("1,2"), gs::parse_error);
  EXPECT_THROW(gs::parse_cutting_rule("a,b"), gs::parse_error);
}

TEST(ParseSystem, TwoCyclesOneRule) {
  const auto file = gs::parse_system(
      "plfs 1\n"
      "max-iterations 1\n"
      "axiom cycle 3\n"
      "axiom cycle 4\n"
      "rule 1,2:2,3\n");
  EXPECT_EQ(file.config.max_iterations, 1u);
  ASSERT_EQ(file.system.axioms.size(), 2u);
  EXPECT_EQ(file.system.axioms[1], gs::cycle(4));
  ASSERT_EQ(file.system.rules.size(), 1u);
  EXPECT_EQ(file.system.rules[0], (gs::SplicingRule{{1, 2}, {2, 3}}));
}

TEST(ParseSystem, AllAxiomKinds) {
  const auto file = gs::parse_system(
      "plfs 1\nmax-order 6\naxiom path 3\naxiom complete 4\naxiom bipartite 2 3\naxiom graph 4 1-3 2-4 1-4\nrule 1,1:2,2\n");
  EXPECT_EQ(file.config.max_order, 6u);
  ASSERT_EQ(file.system.axioms.size(), 4u);
  EXPECT_EQ(file.system.axioms[2], gs::complete_bipartite(2, 3));
  EXPECT_EQ(file.system.axioms[3], graph(4, {{1, 3}, {2, 4}, {1, 4}}));
}

TEST(ParseSystem, Errors) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      gs::parse_system(text);
    } catch (const gs::parse_error& e) {
      return e.line();
    }
    return static_cast<std::size_t>(-1);
  };
  EXPECT_EQ(line_of("plfs 1\naxiom cycle 2\n"), 2u);
  EXPECT_EQ(line_of("plfs 1\naxiom star 3\n"), 2u);
  EXPECT_EQ(line_of("plfs 1\naxiom cycle 3\nrule 1,2\n"), 3u);
  EXPECT_EQ(line_of("plfs 1\naxiom graph 3 1-1\n"), 2u);
  EXPECT_EQ(line_of("plfg 1\n"), 1u);
}

TEST(Report, CutJsonKeys) {
  const auto k5 = gs::complete(5);
  const auto j = gs::cut_json(k5, gs::cut(k5, {2, 3}));
  EXPECT_EQ(j["power"], 6);
  EXPECT_EQ(j["ecut"].size(), 6u);
  EXPECT_TRUE(j["vcut"].empty());
}
