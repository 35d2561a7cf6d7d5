#include "edgeideal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

#include "edgeideal/invariants.hpp"
#include "edgeideal/structure.hpp"
#include "edgeideal/trees.hpp"

namespace edgeideal {

void TreeOutcome::check(std::string claim, bool pass, std::string expected, std::string actual) {
  hard.push_back({std::move(claim), pass, std::move(expected), std::move(actual)});
}

namespace {

const std::pair<Suite, const char*> kSuiteNames[] = {
    {Suite::Linres, "linres"}, {Suite::Betti, "betti"},   {Suite::Cycles, "cycles"}, {Suite::Caterpillar, "caterpillar"},
    {Suite::Deletion, "deletion"}, {Suite::Zagreb, "zagreb"}, {Suite::All, "all"},
};

std::string join(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? "," : "") + std::to_string(vs[k]);
  return out + "]";
}

std::string join(const std::vector<std::vector<Vertex>>& sets) {
  std::string out = "[";
  for (std::size_t k = 0; k < sets.size(); ++k) out += (k ? "," : "") + join(sets[k]);
  return out + "]";
}

std::string join(const std::vector<Edge>& es) {
  std::string out = "[";
  for (std::size_t k = 0; k < es.size(); ++k)
    out += (k ? ",(" : "(") + std::to_string(es[k].a) + "," + std::to_string(es[k].b) + ")";
  return out + "]";
}

bool chordal_by_cycles(const Graph& g) {
  for (int k = 4; k <= g.order(); ++k)
    if (count_induced_cycles(g, k) != 0) return false;
  return true;
}

}  // namespace

std::string to_string(Suite suite) {
  for (const auto& [s, name] : kSuiteNames)
    if (s == suite) return name;
  return "unknown";
}

Suite parse_suite(const std::string& name) {
  for (const auto& [s, n] : kSuiteNames)
    if (name == n) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

int suite_cap(Suite suite) {
  switch (suite) {
    case Suite::Linres: return 12;
    case Suite::Betti: return 9;
    case Suite::Cycles: return 9;
    case Suite::Caterpillar: return 10;
    case Suite::Deletion: return 10;
    case Suite::Zagreb: return 12;
    case Suite::All: return 9;
  }
  return 0;
}

void check_linres(const TreeStudy& t, TreeOutcome& out, bool with_oracle) {
  const Graph& line = t.line().graph;
  const bool linear = t.tree_class().linear();
  const bool co_chordal = t.line_co_chordal();
  out.equal("linres.class_iff_co_chordal", co_chordal, linear);
  if (linear) out.equal("linres.linear_gap_free", std::uint64_t{0}, t.line_gaps());
  out.equal("linres.indmat_le1_iff_linear", t.line_indmat() <= 1, linear);
  if (t.line_complement().size() > 0)
    out.equal("linres.complement_indmat_one", 1, induced_matching_number(t.line_complement()));
  if (!with_oracle) return;

  const BettiTable& betti = t.line_betti();
  const bool oracle_linear = has_linear_resolution(betti);
  out.equal("linres.class_iff_oracle_linear", oracle_linear, linear);
  out.equal("linres.froberg", co_chordal, oracle_linear);
  if (co_chordal) out.check("linres.co_chordal_reg_le1", regularity(betti) <= 1, "<= 1", std::to_string(regularity(betti)));
  const BettiTable complement_betti = graded_betti_table(t.line_complement());
  out.equal("linres.froberg_complement", is_chordal(line), has_linear_resolution(complement_betti));
}

void check_betti(const TreeStudy& t, TreeOutcome& out) {
  const Graph& tree = t.tree();
  const Graph& line = t.line().graph;
  const BettiTable& betti = t.line_betti();

  out.equal("betti.beta00", std::uint64_t{1}, betti.at(0, 0));
  out.equal("betti.beta12_edges", static_cast<std::uint64_t>(line.size()), betti.at(1, 2));
  out.equal("betti.line_edge_formula", static_cast<std::uint64_t>(line.size()), line_edge_count_formula(tree));
  out.equal("betti.b_formula", betti.at(2, 3), second_betti_b_formula(tree));
  const std::uint64_t ev = line_graph(line).graph.size() - count_triangles(line);
  out.equal("betti.eliahou_villarreal", betti.at(2, 3), ev);
  out.equal("betti.beta24_gaps", betti.at(2, 4), t.line_gaps());
  out.equal("betti.gaps_complement_c4", t.line_gaps(), t.complement_cycles(4));
  out.equal("betti.gap_list", t.line_gaps(), static_cast<std::uint64_t>(find_gaps(line).size()));
  out.claim("betti.c_formula", t.line_gaps(), second_betti_c_formula(tree));

  const int pd = projective_dimension(betti);
  out.equal("betti.reg_indmat", regularity(betti), t.line_indmat());
  out.equal("betti.pd_bight", pd, t.line_bight());
  out.equal("betti.pd_dprime", pd, t.line_d_prime());
  out.equal("betti.alpha_facets", t.line_independence_number(), independence_complex(line).dimension() + 1);
  out.equal("betti.froberg", t.line_co_chordal(), has_linear_resolution(betti));
  out.claim("betti.gf2_agreement", true, betti == t.line_betti_gf2());
}

void check_cycles(const TreeStudy& t, TreeOutcome& out) {
  const Graph& line = t.line().graph;
  const Graph& comp = t.line_complement();
  const int m = static_cast<int>(t.tree().size());

  std::string long_cycles = "none";
  for (int k = 5; k <= m; ++k) {
    if (const auto count = t.complement_cycles(k); count != 0) {
      long_cycles = "C" + std::to_string(k) + "=" + std::to_string(count);
      break;
    }
  }
  out.equal("cycles.complement_no_long_cycles", std::string("none"), long_cycles);
  out.equal("cycles.complement_c4_gaps", t.line_gaps(), t.complement_cycles(4));
  const std::uint64_t triangles = t.complement_cycles(3);
  out.equal("cycles.complement_c3_matchings", count_three_matchings(t.tree()), triangles);
  out.claim("cycles.c3_formula", triangles, complement_c3_formula(t.tree()));

  out.equal("cycles.line_chordal", chordal_by_cycles(line), is_chordal(line));
  out.equal("cycles.complement_chordal", chordal_by_cycles(comp), is_chordal(comp));
  out.equal("cycles.complement_weakly_chordal", true, is_weakly_chordal(comp));
}

void check_caterpillar(const TreeStudy& t, TreeOutcome& out) {
  const Graph& tree = t.tree();
  if (!is_caterpillar(tree)) return;
  const CaterpillarProfile profile = caterpillar_profile(tree);
  const BettiTable& betti = t.line_betti();
  const int pd = projective_dimension(betti);

  out.equal("caterpillar.pd_formula", pd, caterpillar_pd(tree));
  out.equal("caterpillar.depth_formula", depth_value(betti), caterpillar_depth(tree));
  out.equal("caterpillar.dprime_pd", pd, t.line_d_prime());
  out.equal("caterpillar.bight_pd", pd, t.line_bight());

  if (profile.cutpoints_degree_at_least(3)) {
    out.equal("caterpillar.dim_formula", t.line_independence_number(), caterpillar_dim(tree));
    out.equal("caterpillar.height_formula", t.line_min_cover(), caterpillar_height(tree));
    out.claim("caterpillar.height_printed", t.line_min_cover(), caterpillar_height_printed(tree));
  }
  if (profile.all_degrees_at_most(4)) {
    const char* id = profile.has_degree_two_cutpoint() ? "caterpillar.reg_cutpoints.with_degree2"
                                                       : "caterpillar.reg_cutpoints.without_degree2";
    out.claim(id, regularity(betti), caterpillar_regularity(tree));
  }
}

void check_deletion(const TreeStudy& t, TreeOutcome& out) {
  const Graph& tree = t.tree();
  const bool star = star_center(tree).has_value();
  for (Vertex u = 0; u < tree.order(); ++u) {
    if (degree(tree, u) != 1) continue;
    const Vertex v = tree.neighbors(u)[0];
    const int dv = degree(tree, v);

    int free = 0;
    bool neighbours_ok = true;
    for (Vertex w : tree.neighbors(v)) {
      const int dw = degree(tree, w);
      if (dw == 1) ++free;
      if (dw == 2) neighbours_ok = false;
    }

    std::string id;
    int shift = 0;
    if (dv >= 4 && neighbours_ok) {
      if (free >= 3) {
        id = "deletion.case_a";
      } else if (free == 2) {
        id = "deletion.case_b";
        shift = 1;
      } else {
        id = "deletion.case_c";
      }
    } else if (dv == 3 && !star) {
      id = "deletion.degree3";
      shift = 1;
    } else {
      continue;
    }
    const int reduced = induced_matching_number(line_graph(remove_vertex(tree, u)).graph);
    out.equal(id, reduced + shift, t.line_indmat());
  }
}

void check_zagreb(const TreeStudy& t, TreeOutcome& out) {
  const Graph& tree = t.tree();
  const LineGraph& lg = t.line();
  const Graph& line = lg.graph;
  const int n = tree.order();
  const auto line_edges = static_cast<std::uint64_t>(line.size());
  const std::uint64_t m1 = zagreb_m1(tree);

  out.equal("zagreb.m1_identity", 2 * (line_edges + tree.size()), m1);
  out.equal("zagreb.tree_form", static_cast<long long>(line_edges),
            1 - n + static_cast<long long>(m1) / 2);
  out.equal("zagreb.line_edge_formula", line_edges, line_edge_count_formula(tree));

  std::uint64_t degree_sum = 0;
  bool degrees_ok = true;
  std::vector<Vertex> expected_cuts;
  for (Vertex k = 0; k < line.order(); ++k) {
    const Edge e = lg.labels[static_cast<std::size_t>(k)];
    degree_sum += static_cast<std::uint64_t>(degree(line, k));
    degrees_ok = degrees_ok && degree(line, k) == edge_degree(tree, e);
    if (degree(tree, e.a) >= 2 && degree(tree, e.b) >= 2) expected_cuts.push_back(k);
  }
  out.equal("zagreb.edge_degree", true, degrees_ok);
  out.equal("zagreb.degree_sum", 2 * line_edges, degree_sum);
  out.equal("zagreb.cutpoints_inner_edges", join(expected_cuts), join(line_cutpoints(tree)));

  std::vector<Edge> expected_bridges;
  std::vector<std::vector<Vertex>> expected_cliques;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> star;
    for (Vertex w : tree.neighbors(v)) star.push_back(lg.vertex_of(Edge(v, w)));
    std::sort(star.begin(), star.end());
    if (star.size() == 2) expected_bridges.emplace_back(star[0], star[1]);
    if (star.size() >= 2) expected_cliques.push_back(star);
  }
  if (n == 2) expected_cliques.push_back({0});
  std::sort(expected_bridges.begin(), expected_bridges.end());
  std::sort(expected_cliques.begin(), expected_cliques.end());
  out.equal("zagreb.bridges_degree_two", join(expected_bridges), join(line_bridges(tree)));
  out.equal("zagreb.block_structure", true, validate_block_structure(lg));
  out.equal("zagreb.line_chordal", true, is_chordal(line));
  out.equal("zagreb.cliques_are_vertex_stars", join(expected_cliques), join(maximal_cliques(line)));
  out.equal("zagreb.complement_involution", true, complement(t.line_complement()) == line);

  if (n <= 8) {
    std::vector<std::vector<Distance>> dt;
    for (Vertex v = 0; v < n; ++v) dt.push_back(distances_from(tree, v));
    bool metric_ok = true;
    for (Vertex x = 0; x < line.order(); ++x) {
      const auto dl = distances_from(line, x);
      const Edge e = lg.labels[static_cast<std::size_t>(x)];
      for (Vertex y = 0; y < line.order(); ++y) {
        if (x == y) continue;
        const Edge f = lg.labels[static_cast<std::size_t>(y)];
        const int closest = std::min({dt[e.a][f.a].value(), dt[e.a][f.b].value(), dt[e.b][f.a].value(),
                                      dt[e.b][f.b].value()});
        metric_ok = metric_ok && dl[static_cast<std::size_t>(y)] == Distance(closest + 1);
      }
    }
    out.equal("zagreb.line_metric", true, metric_ok);
  }
}

const ClaimTally* VerificationReport::claim(const std::string& id) const {
  for (const auto& c : claim_checks)
    if (c.claim == id) return &c;
  return nullptr;
}

std::pair<std::size_t, std::size_t> VerificationReport::tally(const std::string& prefix) const {
  std::pair<std::size_t, std::size_t> total{0, 0};
  for (const auto& [id, counts] : checks) {
    if (id.compare(0, prefix.size(), prefix) != 0) continue;
    total.first += counts.first;
    total.second += counts.second;
  }
  return total;
}

namespace {

struct Job {
  CanonicalTree tree;
  TreeOutcome outcome;
  std::exception_ptr error;
};

void run_checks(Suite suite, const TreeStudy& study, TreeOutcome& out) {
  const int n = study.n();
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Linres) check_linres(study, out, n <= kLinresOracleMaxN);
  if (all || suite == Suite::Betti) check_betti(study, out);
  if (all || suite == Suite::Cycles) check_cycles(study, out);
  if ((all || suite == Suite::Caterpillar) && n >= 3) check_caterpillar(study, out);
  if (all || suite == Suite::Deletion) check_deletion(study, out);
  if (all || suite == Suite::Zagreb) check_zagreb(study, out);
}

void run_parallel(std::vector<Job>& jobs, Suite suite, int threads) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        const TreeStudy study(jobs[k].tree.graph());
        run_checks(suite, study, jobs[k].outcome);
      } catch (...) {
        jobs[k].error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& job : jobs)
    if (job.error) std::rethrow_exception(job.error);
}

class Collector {
 public:
  explicit Collector(VerificationReport& report) : report_(report) {}

  void hard(const std::string& tree, int n, const HardCheck& c) {
    auto& counts = report_.checks[c.claim];
    ++counts.first;
    ++report_.instances;
    if (c.pass) {
      ++report_.passed;
    } else {
      ++counts.second;
      report_.failures.push_back({tree, n, c.claim, c.expected, c.actual});
    }
  }

  void claim(const std::string& tree, int n, const ClaimObservation& c) {
    ClaimTally& tally = tallies_[c.claim];
    tally.claim = c.claim;
    ++tally.checked;
    auto& per_n = tally.per_n[n];
    ++per_n.first;
    if (c.agree) {
      ++tally.agree;
      ++per_n.second;
    } else if (tally.counterexamples.size() < kMaxCounterexamples) {
      tally.counterexamples.push_back({tree, n, c.expected, c.actual});
    }
  }

  void finish() {
    for (auto& [id, tally] : tallies_) report_.claim_checks.push_back(std::move(tally));
  }

 private:
  VerificationReport& report_;
  std::map<std::string, ClaimTally> tallies_;
};

// Betti numbers of an induced subgraph never exceed those of the graph.
void monotonicity_pairs(const std::vector<Job>& jobs, Collector& collector) {
  std::vector<const Job*> usable;
  for (const auto& job : jobs)
    if (job.tree.n >= 3) usable.push_back(&job);
  if (usable.empty()) return;
  std::mt19937 rng(20240917u);
  for (int pair = 0; pair < 100; ++pair) {
    const Job& job = *usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
    const Graph line = line_graph(job.tree.graph()).graph;
    const VertexSet all = full_set(line.order());
    VertexSet subset = 0;
    while (subset == 0) subset = std::uniform_int_distribution<VertexSet>(0, all)(rng);
    const BettiTable whole = graded_betti_table(line);
    const BettiTable part = graded_betti_table(induced_subgraph(line, subset).graph);
    std::string violation = "none";
    for (const auto& [ij, value] : part.entries()) {
      if (value > whole.at(ij.first, ij.second)) {
        violation = "beta_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "}=" +
                    std::to_string(value) + " > " + std::to_string(whole.at(ij.first, ij.second));
        break;
      }
    }
    collector.hard(job.tree.form + " W=" + std::to_string(subset), job.tree.n,
                   {"betti.induced_monotone", violation == "none", "none", violation});
  }
}

}  // namespace

VerificationReport verify(Suite suite, int max_n, int jobs) {
  const int min_n = suite == Suite::Caterpillar ? 3 : 2;
  if (max_n < min_n || max_n > suite_cap(suite)) {
    throw std::out_of_range("verify --suite " + to_string(suite) + ": --max-n must be in " + std::to_string(min_n) +
                            ".." + std::to_string(suite_cap(suite)));
  }
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.suite = to_string(suite);
  report.min_n = min_n;
  report.max_n = max_n;

  std::vector<Job> work;
  for (int n = min_n; n <= max_n; ++n)
    for (auto& tree : enumerate_trees(n)) work.push_back({std::move(tree), {}, nullptr});
  report.trees = work.size();

  run_parallel(work, suite, std::max(1, jobs));

  Collector collector(report);
  for (const auto& job : work) {
    for (const auto& c : job.outcome.hard) collector.hard(job.tree.form, job.tree.n, c);
    for (const auto& c : job.outcome.claims) collector.claim(job.tree.form, job.tree.n, c);
  }
  if (suite == Suite::Betti || suite == Suite::All) monotonicity_pairs(work, collector);
  collector.finish();

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["suite"] = report.suite;
  j["n_range"] = {report.min_n, report.max_n};
  j["trees"] = report.trees;
  j["instances"] = report.instances;
  j["passed"] = report.passed;
  j["ok"] = report.ok();

  auto checks = nlohmann::ordered_json::array();
  for (const auto& [id, counts] : report.checks)
    checks.push_back({{"claim", id}, {"instances", counts.first}, {"failures", counts.second}});
  j["checks"] = checks;

  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back(
        {{"tree", f.tree}, {"n", f.n}, {"claim", f.claim}, {"expected", f.expected}, {"actual", f.actual}});
  }
  j["failures"] = failures;

  auto claims = nlohmann::ordered_json::array();
  for (const auto& c : report.claim_checks) {
    nlohmann::ordered_json entry;
    entry["claim"] = c.claim;
    entry["checked"] = c.checked;
    entry["agree"] = c.agree;
    auto per_n = nlohmann::ordered_json::array();
    for (const auto& [n, counts] : c.per_n) per_n.push_back({{"n", n}, {"checked", counts.first}, {"agree", counts.second}});
    entry["per_n"] = per_n;
    auto examples = nlohmann::ordered_json::array();
    for (const auto& x : c.counterexamples)
      examples.push_back({{"tree", x.tree}, {"n", x.n}, {"oracle", x.expected}, {"formula", x.actual}});
    entry["counterexamples"] = examples;
    claims.push_back(entry);
  }
  j["claim_checks"] = claims;
  return j;
}

}  // namespace edgeideal
