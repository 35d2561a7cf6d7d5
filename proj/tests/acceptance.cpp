// Acceptance checks. Usage: acceptance [criterion...]; with no arguments all
// nine run. Prints one PASS/FAIL line per criterion followed by indented
// detail lines, and exits nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/line_graph.hpp"
#include "edgeideal/study.hpp"
#include "edgeideal/trees.hpp"
#include "edgeideal/verify.hpp"

using namespace edgeideal;

namespace {

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void require(bool condition, const std::string& what) {
    if (!condition) pass = false;
    details.push_back(std::string(condition ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("     " + what); }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string counts(const VerificationReport& r, const std::string& claim) {
  const auto [instances, failures] = r.tally(claim);
  return claim + ": " + std::to_string(instances - failures) + "/" + std::to_string(instances) + " hold";
}

bool clean(const VerificationReport& r, const std::string& claim, std::size_t expected_instances) {
  const auto [instances, failures] = r.tally(claim);
  return failures == 0 && instances == expected_instances;
}

void require_clean(Verdict& v, const VerificationReport& r, const std::string& claim, std::size_t expected) {
  v.require(clean(r, claim, expected), counts(r, claim) + " (expected " + std::to_string(expected) + " instances)");
}

void report_claim(Verdict& v, const VerificationReport& r, const std::string& id) {
  const ClaimTally* c = r.claim(id);
  if (!c) {
    v.note("claim " + id + ": no instances");
    return;
  }
  std::ostringstream line;
  line << "claim " << id << ": formula agrees on " << c->agree << "/" << c->checked << " (per n:";
  for (const auto& [n, pair] : c->per_n) line << " " << n << ":" << pair.second << "/" << pair.first;
  line << ")";
  v.note(line.str());
  if (!c->counterexamples.empty()) {
    const auto& x = c->counterexamples.front();
    v.note("  first counterexample n=" + std::to_string(x.n) + " " + x.tree + " oracle " + x.expected + " formula " +
           x.actual);
  }
}

void report_failures(Verdict& v, const VerificationReport& r) {
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    if (shown++ == 3) break;
    v.note("failure " + f.claim + " n=" + std::to_string(f.n) + " " + f.tree + " expected " + f.expected + " got " +
           f.actual);
  }
}

// Trees on 2..max_n vertices.
std::size_t tree_count(int max_n) {
  static const std::size_t per_order[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  std::size_t total = 0;
  for (int n = 2; n <= max_n; ++n) total += per_order[n];
  return total;
}

Verdict criterion1() {
  Verdict v;
  v.summary = "linear-resolution classification, trees 2 <= n <= 10";
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport r = verify(Suite::Linres, 10, 1);
  const double elapsed = seconds_since(start);
  require_clean(v, r, "linres.class_iff_co_chordal", tree_count(10));
  require_clean(v, r, "linres.class_iff_oracle_linear", tree_count(9));
  v.require(elapsed < 300.0, "single-threaded run " + std::to_string(elapsed) + " s < 300 s");
  return v;
}

Verdict criterion2() {
  Verdict v;
  v.summary = "second Betti number b, trees 2 <= n <= 9";
  const VerificationReport r = verify(Suite::Betti, 9, 1);
  require_clean(v, r, "betti.b_formula", tree_count(9));
  require_clean(v, r, "betti.eliahou_villarreal", tree_count(9));
  return v;
}

Verdict criterion3() {
  Verdict v;
  v.summary = "second Betti number c, trees 2 <= n <= 9";
  const VerificationReport r = verify(Suite::Betti, 9, 1);
  require_clean(v, r, "betti.beta24_gaps", tree_count(9));
  require_clean(v, r, "betti.gaps_complement_c4", tree_count(9));
  report_claim(v, r, "betti.c_formula");

  const TreeStudy t1(build_graph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}));
  const BettiTable& b = t1.line_betti();
  v.require(b.at(2, 4) == 1 && second_betti_c_formula(t1.tree()) == 1, "T1: c = 1 (oracle and formula)");
  v.require(b.at(2, 3) == 8, "T1: b = 8");
  v.require(regularity(b) == 2, "T1: reg = 2");
  return v;
}

Verdict criterion4() {
  Verdict v;
  v.summary = "regularity equals induced matching number, trees 2 <= n <= 9";
  const VerificationReport r = verify(Suite::Betti, 9, 1);
  require_clean(v, r, "betti.reg_indmat", tree_count(9));
  return v;
}

Verdict criterion5() {
  Verdict v;
  v.summary = "induced cycles in the complement of L(T), trees 2 <= n <= 9";
  const VerificationReport r = verify(Suite::Cycles, 9, 1);
  require_clean(v, r, "cycles.complement_no_long_cycles", tree_count(9));
  require_clean(v, r, "cycles.complement_c4_gaps", tree_count(9));
  require_clean(v, r, "cycles.complement_c3_matchings", tree_count(9));
  const VerificationReport betti = verify(Suite::Betti, 9, 1);
  require_clean(v, betti, "betti.gaps_complement_c4", tree_count(9));
  report_claim(v, r, "cycles.c3_formula");
  return v;
}

Verdict criterion6() {
  Verdict v;
  v.summary = "caterpillar invariants, caterpillars 3 <= n <= 10";
  const VerificationReport r = verify(Suite::Caterpillar, 10, 1);
  const std::size_t caterpillars = r.tally("caterpillar.bight_pd").first;
  v.note(std::to_string(caterpillars) + " caterpillars checked");
  for (const char* claim : {"caterpillar.pd_formula", "caterpillar.depth_formula", "caterpillar.dprime_pd",
                            "caterpillar.bight_pd"}) {
    require_clean(v, r, claim, caterpillars);
  }
  const auto dim = r.tally("caterpillar.dim_formula");
  v.require(dim.first > 0 && dim.second == 0, counts(r, "caterpillar.dim_formula"));
  const auto height = r.tally("caterpillar.height_formula");
  v.require(height.first > 0 && height.second == 0, counts(r, "caterpillar.height_formula"));
  report_claim(v, r, "caterpillar.height_printed");
  report_claim(v, r, "caterpillar.reg_cutpoints.without_degree2");
  report_claim(v, r, "caterpillar.reg_cutpoints.with_degree2");
  report_failures(v, r);
  return v;
}

Verdict criterion7() {
  Verdict v;
  v.summary = "pendant-deletion induced matching relations, trees n <= 10";
  const VerificationReport r = verify(Suite::Deletion, 10, 1);
  for (const char* claim : {"deletion.case_a", "deletion.case_b", "deletion.case_c", "deletion.degree3"}) {
    const auto [instances, failures] = r.tally(claim);
    v.require(failures == 0, counts(r, claim));
    if (instances == 0) v.note(std::string(claim) + " has no instance on n <= 10");
  }
  report_failures(v, r);
  return v;
}

Verdict criterion8() {
  Verdict v;
  v.summary = "Zagreb identity, trees 2 <= n <= 12";
  const VerificationReport r = verify(Suite::Zagreb, 12, 1);
  require_clean(v, r, "zagreb.m1_identity", tree_count(12));
  require_clean(v, r, "zagreb.tree_form", tree_count(12));
  return v;
}

Verdict criterion9() {
  Verdict v;
  v.summary = "enumeration, oracle sanity and full-run time";
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  std::string got;
  bool counts_ok = true;
  for (int n = 1; n <= 10; ++n) {
    const std::size_t c = enumerate_trees(n).size();
    got += (n > 1 ? "," : "") + std::to_string(c);
    counts_ok = counts_ok && c == expected[static_cast<std::size_t>(n - 1)];
  }
  v.require(counts_ok, "free-tree counts n=1..10: " + got);

  bool overlap_ok = true;
  for (int n = 2; n <= kMaxPruferEnumerationOrder; ++n) {
    const auto a = enumerate_trees_prufer(n);
    const auto b = enumerate_trees_by_extension(n);
    overlap_ok = overlap_ok && a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
  }
  v.require(overlap_ok, "Pruefer and leaf-extension enumerations agree for n <= 8");

  const auto start = std::chrono::steady_clock::now();
  const VerificationReport all = verify(Suite::All, 9, 1);
  const double elapsed = seconds_since(start);
  require_clean(v, all, "betti.beta00", tree_count(9));
  require_clean(v, all, "betti.beta12_edges", tree_count(9));
  v.require(elapsed < 1800.0, "verify --suite all --max-n 9 finished in " + std::to_string(elapsed) + " s < 1800 s");
  v.note("that run: " + std::to_string(all.passed) + "/" + std::to_string(all.instances) + " hard checks, " +
         std::to_string(all.failures.size()) + " failures (criteria 6 and 7)");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  std::vector<int> selected;
  for (int k = 1; k < argc; ++k) {
    const int c = std::atoi(argv[k]);
    if (c < 1 || c > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion '" << argv[k] << "'\n";
      return 2;
    }
    selected.push_back(c);
  }
  if (selected.empty())
    for (int c = 1; c <= static_cast<int>(criteria.size()); ++c) selected.push_back(c);

  bool all_pass = true;
  for (int c : selected) {
    Verdict v;
    try {
      v = criteria[static_cast<std::size_t>(c - 1)]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.details.push_back(std::string("FAIL exception: ") + e.what());
    }
    all_pass = all_pass && v.pass;
    std::cout << "criterion " << c << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.summary << "\n";
    for (const auto& d : v.details) std::cout << "    " << d << "\n";
  }
  return all_pass ? 0 : 1;
}
