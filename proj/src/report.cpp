#include "edgeideal/report.hpp"

#include <sstream>

#include "edgeideal/invariants.hpp"
#include "edgeideal/structure.hpp"
#include "edgeideal/study.hpp"
#include "edgeideal/trees.hpp"
#include "edgeideal/verify.hpp"

namespace edgeideal {

namespace {

using Json = nlohmann::ordered_json;

Json one_based(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

Json one_based(const Edge& e) { return Json::array({e.a + 1, e.b + 1}); }

Json class_section(const TreeStudy& t) {
  const TreeClass& c = t.tree_class();
  Json j;
  j["tag"] = to_string(c.tag);
  j["linear"] = c.linear();
  j["center"] = c.center ? Json(*c.center + 1) : Json(nullptr);
  j["path"] = one_based(c.path);
  j["caterpillar"] = is_caterpillar(t.tree());
  return j;
}

Json caterpillar_section(const Graph& tree) {
  const CaterpillarProfile p = caterpillar_profile(tree);
  Json j;
  j["backbone"] = one_based(p.backbone);
  j["cutpoints"] = one_based(p.cutpoints);
  j["cutpoint_degrees"] = p.cutpoint_degrees;
  j["r"] = p.r();
  j["pd_formula"] = caterpillar_pd(tree);
  j["depth_formula"] = caterpillar_depth(tree);
  if (p.cutpoints_degree_at_least(3)) {
    j["dim_formula"] = caterpillar_dim(tree);
    j["height_formula"] = caterpillar_height(tree);
    j["height_printed_formula"] = caterpillar_height_printed(tree);
  }
  if (p.all_degrees_at_most(4)) j["reg_formula"] = caterpillar_regularity(tree);
  return j;
}

Json gap_list(const LineGraph& lg) {
  Json out = Json::array();
  for (const GapPair& gap : find_gaps(lg.graph)) {
    out.push_back(Json::array({one_based(lg.labels[static_cast<std::size_t>(gap.e.a)]),
                               one_based(lg.labels[static_cast<std::size_t>(gap.e.b)])}));
    out.back().push_back(Json::array({one_based(lg.labels[static_cast<std::size_t>(gap.f.a)]),
                                      one_based(lg.labels[static_cast<std::size_t>(gap.f.b)])}));
  }
  return out;
}

}  // namespace

Json betti_rows(const BettiTable& table) {
  Json rows = Json::array();
  for (const auto& [ij, value] : table.entries()) rows.push_back(Json::array({ij.first, ij.second, value}));
  return rows;
}

Json analyze(const Graph& tree) {
  if (!is_tree(tree)) throw GraphError("analyze: input is not a tree");
  if (tree.order() > kMaxAnalyzeOrder) {
    throw SizeLimitError("analyze: trees are limited to " + std::to_string(kMaxAnalyzeOrder) + " vertices");
  }
  const TreeStudy t(tree);
  const LineGraph& lg = t.line();
  const Graph& line = lg.graph;
  const bool oracle = t.oracle_available();

  Json report;
  report["tool_version"] = kToolVersion;

  Json input;
  input["n"] = t.n();
  Json edges = Json::array();
  for (const Edge& e : tree.edges()) edges.push_back(one_based(e));
  input["edges"] = edges;
  input["canonical_form"] = t.form();
  report["input"] = input;

  report["class"] = class_section(t);

  Json inv;
  inv["diameter"] = t.n() == 1 ? 0 : diameter(tree).value();
  inv["line_vertices"] = line.order();
  inv["line_edges"] = line.size();
  inv["line_edge_formula"] = line_edge_count_formula(tree);
  inv["zagreb_m1"] = zagreb_m1(tree);
  inv["zagreb_identity"] = zagreb_m1(tree) == 2 * (line.size() + tree.size());
  inv["b_formula"] = second_betti_b_formula(tree);
  inv["c_formula"] = second_betti_c_formula(tree);
  inv["c3_formula"] = complement_c3_formula(tree);
  inv["three_matchings"] = count_three_matchings(tree);
  inv["gap_count"] = t.line_gaps();
  inv["gaps"] = gap_list(lg);
  inv["line_co_chordal"] = t.line_co_chordal();
  inv["oracle"] = oracle;
  if (oracle) {
    const BettiTable& betti = t.line_betti();
    inv["b"] = betti.at(2, 3);
    inv["c"] = betti.at(2, 4);
    inv["linear_resolution"] = has_linear_resolution(betti);
    inv["indmat"] = t.line_indmat();
    inv["reg"] = regularity(betti);
    inv["pd"] = projective_dimension(betti);
    inv["depth"] = depth_value(betti);
    inv["dim"] = t.line_independence_number();
    inv["height"] = t.line_min_cover();
    inv["bight"] = t.line_bight();
    inv["d_prime"] = t.line_d_prime();
    Json cycles;
    for (int k = 3; k <= line.order(); ++k) cycles[std::to_string(k)] = t.complement_cycles(k);
    inv["complement_cycles"] = cycles;
  }
  if (is_caterpillar(tree)) inv["caterpillar"] = caterpillar_section(tree);
  report["invariants"] = inv;

  report["betti_table"] = oracle ? betti_rows(t.line_betti()) : Json::array();

  TreeOutcome outcome;
  check_zagreb(t, outcome);
  if (oracle) {
    check_linres(t, outcome, true);
    check_betti(t, outcome);
    check_cycles(t, outcome);
    if (t.n() >= 3) check_caterpillar(t, outcome);
    check_deletion(t, outcome);
  }
  Json claims = Json::array();
  for (const auto& c : outcome.claims) {
    claims.push_back({{"claim", c.claim}, {"agree", c.agree}, {"oracle", c.expected}, {"formula", c.actual}});
  }
  report["claim_checks"] = claims;
  Json failures = Json::array();
  for (const auto& c : outcome.hard) {
    if (!c.pass) failures.push_back({{"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual}});
  }
  report["failures"] = failures;
  return report;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << "tree: n=" << report["input"]["n"] << " form=" << report["input"]["canonical_form"].get<std::string>() << "\n";
  out << "class: " << report["class"]["tag"].get<std::string>()
      << (report["class"]["linear"].get<bool>() ? " (linear resolution)" : "") << "\n";
  for (const auto& [key, value] : report["invariants"].items()) {
    if (key == "gaps") continue;
    out << "  " << key << ": " << value.dump() << "\n";
  }
  if (!report["betti_table"].empty()) {
    out << "betti table of R/I(L(T)) (i, j, beta):\n";
    for (const auto& row : report["betti_table"]) out << "  " << row[0] << " " << row[1] << " " << row[2] << "\n";
  }
  for (const auto& c : report["claim_checks"]) {
    out << "claim " << c["claim"].get<std::string>() << ": " << (c["agree"].get<bool>() ? "agrees" : "DISAGREES")
        << " (oracle " << c["oracle"].get<std::string>() << ", formula " << c["formula"].get<std::string>() << ")\n";
  }
  for (const auto& f : report["failures"]) {
    out << "FAILED " << f["claim"].get<std::string>() << ": expected " << f["expected"].get<std::string>()
        << ", got " << f["actual"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace edgeideal
