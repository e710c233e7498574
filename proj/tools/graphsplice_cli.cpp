// graphsplice: command-line front end for cutting, splicing, bounded language
// closure and the theorem sweeps.
//
// Exit codes: 0 ok, 1 asserted violation (verify), 2 usage or invalid input,
// 3 parse error, 4 cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphsplice/analysis.hpp"
#include "graphsplice/canonical.hpp"
#include "graphsplice/io.hpp"
#include "graphsplice/language.hpp"
#include "graphsplice/report.hpp"
#include "graphsplice/splicing.hpp"

namespace gs = graphsplice;
namespace fs = std::filesystem;

namespace {

enum Exit : int { ok = 0, violated = 1, usage = 2, parse = 3, cap = 4 };

struct io_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse errors are re-thrown with the file name in front.
struct file_parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_failure("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw io_failure("cannot write '" + path.string() + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

gs::PlfGraph load_graph(const std::string& path) {
  const auto text = read_file(path);
  try {
    return gs::parse_graph(text);
  } catch (const gs::parse_error& e) {
    throw file_parse_error(path + ": " + e.what());
  }
}

void print(const gs::json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------ subcommands

int run_gen(const std::string& kind, const std::vector<std::size_t>& params, const std::string& out) {
  auto want = [&](std::size_t n) {
    if (params.size() != n) {
      throw std::invalid_argument("gen " + kind + " takes " + std::to_string(n) + " parameter(s)");
    }
  };
  gs::PlfGraph g;
  if (kind == "cycle") {
    want(1);
    g = gs::cycle(params[0]);
  } else if (kind == "path") {
    want(1);
    g = gs::path(params[0]);
  } else if (kind == "complete") {
    want(1);
    g = gs::complete(params[0]);
  } else if (kind == "bipartite") {
    want(2);
    g = gs::complete_bipartite(params[0], params[1]);
  } else {
    throw std::invalid_argument("unknown generator '" + kind + "'");
  }
  emit(gs::write_graph(g), out);
  return ok;
}

int run_cut(const std::string& rule_text, const std::string& path) {
  const auto g = load_graph(path);
  const auto rule = gs::parse_cutting_rule(rule_text);
  gs::json j{{"graph", gs::graph_json(g)}};
  j["cut"] = gs::cut_json(g, gs::cut(g, rule));
  print(j);
  return ok;
}

int run_splice(const std::string& rule_text, const std::string& g_path, const std::string& h_path,
               const std::string& direction, const std::string& out_dir) {
  const auto g = load_graph(g_path);
  const auto h = load_graph(h_path);
  const auto s = gs::parse_splicing_rule(rule_text);
  std::vector<gs::SpliceProduct> products;
  if (direction == "first") {
    products = gs::products_first(g, h, s);
  } else if (direction == "second") {
    products = gs::products_second(g, h, s);
  } else {
    products = gs::sigma_pair(g, h, s);
  }

  gs::json listing = gs::json::array();
  for (std::size_t k = 0; k < products.size(); ++k) {
    auto entry = gs::product_json(products[k]);
    if (!out_dir.empty()) {
      const auto name = "product-" + std::to_string(k + 1) + ".plfg";
      std::string bijection;
      for (std::size_t i = 0; i < products[k].bijection.size(); ++i) {
        bijection += (i ? "," : "") + std::to_string(products[k].bijection[i]);
      }
      std::string text = "# G " + g_path + "\n# H " + h_path + "\n# rule " + s.str() + "\n# direction " +
                         gs::to_string(products[k].direction) + "\n# bijection " + bijection + "\n";
      text += gs::write_graph(products[k].graph);
      write_file(fs::path(out_dir) / name, text);
      entry["file"] = name;
    }
    listing.push_back(std::move(entry));
  }
  print(gs::json{{"rule", s.str()}, {"power", gs::power(g, s.c1)}, {"count", products.size()}, {"products", listing}});
  return ok;
}

int run_lang(const std::string& path) {
  const auto text = read_file(path);
  gs::SystemFile file;
  try {
    file = gs::parse_system(text);
  } catch (const gs::parse_error& e) {
    throw file_parse_error(path + ": " + e.what());
  }
  const auto result = gs::language(file.system, file.config);
  gs::json j{{"max_iterations", file.config.max_iterations}, {"max_order", file.config.max_order}};
  j.update(gs::language_json(result));
  print(j);
  return ok;
}

int run_verify(std::size_t max_order, const std::optional<std::string>& theorem) {
  const auto reports = gs::verify_all(max_order, theorem);
  gs::json list = gs::json::array();
  for (const auto& r : reports) list.push_back(gs::theorem_json(r));
  const bool holds = gs::all_asserted_hold(reports);
  print(gs::json{{"max_order", max_order}, {"all_asserted_hold", holds}, {"reports", list}});
  return holds ? ok : violated;
}

int run_iso(const std::string& g_path, const std::string& h_path) {
  const auto g = load_graph(g_path);
  const auto h = load_graph(h_path);
  const bool iso = gs::is_isomorphic(g, h);
  print(gs::json{{"isomorphic", iso},
                 {"g", gs::canonical_form(g).str()},
                 {"h", gs::canonical_form(h).str()}});
  return ok;
}

int run_export_dot(const std::string& path, const std::string& name, const std::string& out) {
  emit(gs::export_dot(load_graph(path), name), out);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut, splice and close graphs in pseudo-linear form"};
  app.require_subcommand(1);

  std::string kind, out, rule, g_path, h_path, direction = "both", out_dir, system_path, name = "plf";
  std::vector<std::size_t> params;
  std::size_t max_order = 0;
  std::optional<std::string> theorem;

  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("kind", kind, "cycle, path, complete or bipartite")->required()
      ->check(CLI::IsMember({"cycle", "path", "complete", "bipartite"}));
  gen->add_option("params", params, "Sizes (bipartite takes two)")->required();
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  auto* cut = app.add_subcommand("cut", "Cut a graph and print ECUT, VCUT, power and fragments");
  cut->add_option("--rule", rule, "Cutting rule I,J")->required();
  cut->add_option("graph", g_path)->required();

  auto* splice = app.add_subcommand("splice", "Splice two graphs and list every product");
  splice->add_option("--rule", rule, "Splicing rule I,J:K,L")->required();
  splice->add_option("G", g_path)->required();
  splice->add_option("H", h_path)->required();
  splice->add_option("--direction", direction)->check(CLI::IsMember({"first", "second", "both"}));
  splice->add_option("--out-dir", out_dir, "Also write one graph file per product")->check(CLI::ExistingDirectory);

  auto* lang = app.add_subcommand("lang", "Bounded closure of a splicing system");
  lang->add_option("system", system_path)->required();

  auto* verify = app.add_subcommand("verify", "Sweep the structural theorems over small graphs");
  verify->add_option("--max-order", max_order)->required();
  verify->add_option("--theorem", theorem, "Run a single check by id");

  auto* iso = app.add_subcommand("iso", "Isomorphism verdict for two graphs");
  iso->add_option("G", g_path)->required();
  iso->add_option("H", h_path)->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz DOT with vertices pinned at their positions");
  dot->add_option("graph", g_path)->required();
  dot->add_option("--name", name);
  dot->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*gen) return run_gen(kind, params, out);
    if (*cut) return run_cut(rule, g_path);
    if (*splice) return run_splice(rule, g_path, h_path, direction, out_dir);
    if (*lang) return run_lang(system_path);
    if (*verify) return run_verify(max_order, theorem);
    if (*iso) return run_iso(g_path, h_path);
    if (*dot) return run_export_dot(g_path, name, out);
  } catch (const gs::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const file_parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const gs::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return cap;
  } catch (const gs::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const io_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
