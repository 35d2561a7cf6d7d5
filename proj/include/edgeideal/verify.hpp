#ifndef EDGEIDEAL_VERIFY_HPP
#define EDGEIDEAL_VERIFY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgeideal/study.hpp"

namespace edgeideal {

inline constexpr const char* kToolVersion = "edgeideal 1.0.0";

enum class Suite { Linres, Betti, Cycles, Caterpillar, Deletion, Zagreb, All };

std::string to_string(Suite suite);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);
/// Largest max_n accepted by verify() for the suite.
int suite_cap(Suite suite);
/// Largest tree order for which oracle-backed checks run inside the linres suite.
inline constexpr int kLinresOracleMaxN = 9;

/// Outcome of one hard check: an identity between two independent computations.
struct HardCheck {
  std::string claim;
  bool pass = false;
  std::string expected;
  std::string actual;
};

/// One evaluation of a closed form against the oracle. Disagreement
/// is recorded, never fatal.
struct ClaimObservation {
  std::string claim;
  bool agree = false;
  std::string expected;
  std::string actual;
};

struct TreeOutcome {
  std::vector<HardCheck> hard;
  std::vector<ClaimObservation> claims;

  void check(std::string claim, bool pass, std::string expected, std::string actual);
  template <typename T>
  void equal(std::string claim, const T& expected, const T& actual) {
    check(std::move(claim), expected == actual, render(expected), render(actual));
  }
  template <typename T>
  void claim(std::string claim, const T& oracle, const T& formula) {
    claims.push_back({std::move(claim), oracle == formula, render(oracle), render(formula)});
  }

  static std::string render(bool v) { return v ? "true" : "false"; }
  static std::string render(const std::string& v) { return v; }
  template <typename T>
  static std::string render(const T& v) {
    return std::to_string(v);
  }
};

// Per-tree checks of each suite. `with_oracle` gates the Hochster-backed checks.
void check_linres(const TreeStudy& t, TreeOutcome& out, bool with_oracle);
void check_betti(const TreeStudy& t, TreeOutcome& out);
void check_cycles(const TreeStudy& t, TreeOutcome& out);
void check_caterpillar(const TreeStudy& t, TreeOutcome& out);
void check_deletion(const TreeStudy& t, TreeOutcome& out);
void check_zagreb(const TreeStudy& t, TreeOutcome& out);

struct Failure {
  std::string tree;
  int n = 0;
  std::string claim;
  std::string expected;
  std::string actual;
};

struct Counterexample {
  std::string tree;
  int n = 0;
  std::string expected;
  std::string actual;
};

struct ClaimTally {
  std::string claim;
  std::size_t checked = 0;
  std::size_t agree = 0;
  /// n -> (checked, agree)
  std::map<int, std::pair<std::size_t, std::size_t>> per_n;
  std::vector<Counterexample> counterexamples;
};

struct VerificationReport {
  std::string suite;
  int min_n = 0;
  int max_n = 0;
  std::size_t trees = 0;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::vector<Failure> failures;
  /// claim -> (instances, failures) over the hard checks.
  std::map<std::string, std::pair<std::size_t, std::size_t>> checks;
  std::vector<ClaimTally> claim_checks;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
  const ClaimTally* claim(const std::string& id) const;
  /// Hard-check instances and failures restricted to claims with the given prefix.
  std::pair<std::size_t, std::size_t> tally(const std::string& prefix) const;
};

/// Runs the suite over every tree on 2..max_n vertices (3..max_n for caterpillars).
/// Throws std::out_of_range when max_n exceeds suite_cap(suite) or is below 2.
VerificationReport verify(Suite suite, int max_n, int jobs = 1);

/// Counterexamples kept per claim; the tallies still count all of them.
inline constexpr std::size_t kMaxCounterexamples = 25;

/// Deterministic rendering; wall time is left out so reruns are byte-identical.
nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace edgeideal

#endif  // EDGEIDEAL_VERIFY_HPP
