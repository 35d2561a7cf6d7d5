#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "edgeideal/betti.hpp"
#include "edgeideal/classify.hpp"
#include "edgeideal/line_graph.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/trees.hpp"
#include "edgeideal/verify.hpp"

namespace {

using namespace edgeideal;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

Graph read_tree(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_tree(in, format == "prufer" ? TreeFormat::Prufer : TreeFormat::EdgeList);
}

int run_analyze(const std::string& path, const std::string& format, bool json) {
  const auto report = analyze(read_tree(path, format));
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  return kExitOk;
}

int run_classify(const std::string& path, const std::string& format) {
  const Graph tree = read_tree(path, format);
  const TreeClass c = classify_tree(tree);
  std::cout << to_string(c.tag) << "\n";
  if (c.center) std::cout << "center: " << *c.center + 1 << "\n";
  if (!c.path.empty()) {
    std::cout << "path:";
    for (Vertex v : c.path) std::cout << " " << v + 1;
    std::cout << "\n";
  }
  std::cout << "linear resolution of I(L(T)): " << (c.linear() ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_betti(const std::string& path, const std::string& format, bool of_line_graph) {
  const Graph tree = read_tree(path, format);
  const Graph g = of_line_graph ? line_graph(tree).graph : tree;
  const BettiTable table = graded_betti_table(g);
  std::cout << "# graded Betti numbers of S/I(" << (of_line_graph ? "L(T)" : "T") << "), " << g.order()
            << " variables\n# i j beta_ij\n";
  for (const auto& [ij, value] : table.entries()) std::cout << ij.first << " " << ij.second << " " << value << "\n";
  std::cout << "# pd " << projective_dimension(table) << ", reg " << regularity(table) << ", depth "
            << depth_value(table) << ", linear " << (has_linear_resolution(table) ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite_name, int max_n, int jobs) {
  const VerificationReport report = verify(parse_suite(suite_name), max_n, jobs);
  std::cout << to_json(report).dump(2) << "\n";
  std::cerr << "suite " << report.suite << " n=" << report.min_n << ".." << report.max_n << ": " << report.trees
            << " trees, " << report.passed << "/" << report.instances << " checks passed, " << report.failures.size()
            << " failures, " << report.wall_seconds << " s\n";
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int run_enumerate(int n, const std::string& emit) {
  const auto trees = enumerate_trees(n);
  std::size_t index = 0;
  for (const auto& t : trees) {
    ++index;
    if (emit == "form") {
      std::cout << t.form << "\n";
    } else if (emit == "prufer") {
      std::cout << (n >= 2 ? emit_prufer(t.graph()) : "\n");
    } else {
      std::cout << "# tree " << index << " of " << trees.size() << "\n" << emit_edgelist(t.graph());
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge ideals of line graphs of trees: invariants, Betti tables and exhaustive checks"};
  app.require_subcommand(1);
  const std::map<std::string, std::string> formats{{"edgelist", "edgelist"}, {"prufer", "prufer"}};

  std::string input, format = "edgelist", suite;
  bool json = false, line = false;
  int max_n = 0, jobs = 1, n = 0;
  std::string emit = "form";

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one tree");
  analyze_cmd->add_option("--input", input, "Tree file")->required();
  analyze_cmd->add_option("--format", format, "Input format")->transform(CLI::CheckedTransformer(formats));
  analyze_cmd->add_flag("--json", json, "Emit the JSON report");

  auto* classify_cmd = app.add_subcommand("classify", "Linear-resolution family of a tree");
  classify_cmd->add_option("--input", input, "Tree file")->required();
  classify_cmd->add_option("--format", format, "Input format")->transform(CLI::CheckedTransformer(formats));

  auto* betti_cmd = app.add_subcommand("betti", "Graded Betti table of the edge ideal");
  betti_cmd->add_option("--input", input, "Tree file")->required();
  betti_cmd->add_option("--format", format, "Input format")->transform(CLI::CheckedTransformer(formats));
  betti_cmd->add_flag("--line-graph", line, "Use L(T) instead of T");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive checks over all trees up to a size");
  verify_cmd->add_option("--suite", suite, "linres, betti, cycles, caterpillar, deletion, zagreb or all")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest tree order")->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the non-isomorphic trees on n vertices");
  enumerate_cmd->add_option("--n", n, "Tree order")->required();
  enumerate_cmd->add_option("--emit", emit, "Output: form, edgelist or prufer")
      ->check(CLI::IsMember({"form", "edgelist", "prufer"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze_cmd) return run_analyze(input, format, json);
    if (*classify_cmd) return run_classify(input, format);
    if (*betti_cmd) return run_betti(input, format, line);
    if (*verify_cmd) return run_verify(suite, max_n, jobs);
    if (*enumerate_cmd) return run_enumerate(n, emit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
