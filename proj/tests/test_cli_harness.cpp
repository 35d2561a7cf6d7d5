#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "edgeideal/line_graph.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/study.hpp"
#include "edgeideal/trees.hpp"
#include "edgeideal/verify.hpp"

using namespace edgeideal;

namespace {

Graph t1() { return build_graph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}); }

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    es.emplace_back(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]);
  return Graph(g.order(), es);
}

ParseError::Kind parse_failure(const std::string& text, TreeFormat format) {
  try {
    parse_tree(text, format);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("input was accepted");
  return ParseError::Kind::Malformed;
}

}  // namespace

TEST_CASE("free tree counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int n = 1; n <= kMaxEnumerationOrder; ++n)
    CHECK(enumerate_trees(n).size() == expected[static_cast<std::size_t>(n - 1)]);
  CHECK_THROWS_AS(enumerate_trees(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_trees(15), std::out_of_range);
}

TEST_CASE("Pruefer and leaf-extension enumeration agree on their overlap") {
  for (int n = 2; n <= kMaxPruferEnumerationOrder; ++n) {
    const auto a = enumerate_trees_prufer(n);
    const auto b = enumerate_trees_by_extension(n);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].form == b[k].form);
      CHECK(a[k].edges == b[k].edges);
    }
  }
}

TEST_CASE("enumerated trees are trees with distinct forms") {
  for (int n = 1; n <= 10; ++n) {
    const auto trees = enumerate_trees(n);
    for (std::size_t k = 0; k < trees.size(); ++k) {
      CHECK(is_tree(trees[k].graph()));
      CHECK(canonical_form(trees[k].graph()) == trees[k].form);
      if (k) CHECK(trees[k - 1].form < trees[k].form);
    }
  }
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
  std::mt19937 rng(43);
  for (int n = 2; n <= 9; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph g = relabel(t.graph(), perm);
      CHECK(canonical_form(g) == t.form);
      CHECK(canonicalize(g) == t);
    }
  }
  CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));
  CHECK_THROWS_AS(canonical_form(cycle_graph(4)), GraphError);
}

TEST_CASE("Pruefer codes") {
  const Graph star = prufer_decode({1, 1});
  CHECK(star.order() == 4);
  CHECK(degree(star, 1) == 3);
  CHECK(prufer_decode({}) == path_graph(2));
  CHECK(prufer_encode(star) == std::vector<Vertex>{1, 1});
  CHECK(prufer_encode(path_graph(5)) == std::vector<Vertex>{1, 2, 3});
  CHECK_THROWS_AS(prufer_decode({5}), GraphError);
}

TEST_CASE("parsing edge lists") {
  const Graph g = parse_tree("1 3\n2 3\n3 4\n4 5\n4 6", TreeFormat::EdgeList);
  CHECK(g == t1());
  CHECK(parse_tree("# T1\n\n1 3   # first\n2 3\n3 4\n4 5\n4 6\n", TreeFormat::EdgeList) == t1());
  CHECK(parse_failure("1 1\n", TreeFormat::EdgeList) == ParseError::Kind::SelfLoop);
  CHECK(parse_failure("1 2 3\n", TreeFormat::EdgeList) == ParseError::Kind::Malformed);
  CHECK(parse_failure("1 x\n", TreeFormat::EdgeList) == ParseError::Kind::Malformed);
  CHECK(parse_failure("0 1\n", TreeFormat::EdgeList) == ParseError::Kind::OutOfRange);
  CHECK(parse_failure("1 99999\n", TreeFormat::EdgeList) == ParseError::Kind::OutOfRange);
  CHECK(parse_failure("1 2\n2 3\n1 3\n", TreeFormat::EdgeList) == ParseError::Kind::NotATree);
  CHECK(parse_failure("1 2\n3 4\n", TreeFormat::EdgeList) == ParseError::Kind::NotATree);
  CHECK(parse_failure("1 4000\n", TreeFormat::EdgeList) == ParseError::Kind::NotATree);
  CHECK(parse_failure("", TreeFormat::EdgeList) == ParseError::Kind::NotATree);
}

TEST_CASE("parsing Pruefer sequences") {
  const Graph star = parse_tree("2 2", TreeFormat::Prufer);
  CHECK(star_center(star) == 1);
  CHECK(parse_tree("", TreeFormat::Prufer) == path_graph(2));
  CHECK(parse_failure("2 5", TreeFormat::Prufer) == ParseError::Kind::OutOfRange);
  CHECK(parse_failure("2\n2", TreeFormat::Prufer) == ParseError::Kind::Malformed);
  CHECK(parse_failure("2 b", TreeFormat::Prufer) == ParseError::Kind::Malformed);
}

TEST_CASE("parse(emit(T)) is the identity up to isomorphism") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const Graph g = t.graph();
      CHECK(canonical_form(parse_tree(emit_edgelist(g), TreeFormat::EdgeList)) == t.form);
      CHECK(canonical_form(parse_tree(emit_prufer(g), TreeFormat::Prufer)) == t.form);
    }
  CHECK(emit_edgelist(path_graph(3)) == "1 2\n2 3\n");
}

TEST_CASE("tree study caches the line-graph invariants") {
  const TreeStudy s(t1());
  CHECK(s.n() == 6);
  CHECK(s.line().graph.order() == 5);
  CHECK(s.oracle_available());
  CHECK(s.line_betti().at(2, 3) == 8);
  CHECK(&s.line_betti() == &s.line_betti());
  CHECK(s.line_indmat() == 2);
  CHECK(s.line_gaps() == 1);
  CHECK(s.complement_cycles(4) == 1);
  CHECK(s.complement_cycles(3) == 0);
  CHECK(s.line_bight() == 4);
  CHECK(s.line_min_cover() == 3);
  CHECK(s.line_d_prime() == 4);
  CHECK_FALSE(s.line_co_chordal());
  CHECK(count_three_matchings(path_graph(7)) == 4);
  CHECK(count_three_matchings(t1()) == 0);
}

TEST_CASE("suite names and caps") {
  CHECK(parse_suite("caterpillar") == Suite::Caterpillar);
  CHECK(to_string(Suite::All) == "all");
  CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
  CHECK_THROWS_AS(verify(Suite::Betti, 10), std::out_of_range);
  CHECK_THROWS_AS(verify(Suite::Linres, 1), std::out_of_range);
  CHECK(suite_cap(Suite::Zagreb) == 12);
}

TEST_CASE("verify: linres up to n = 8 has no failures") {
  const VerificationReport r = verify(Suite::Linres, 8);
  CHECK(r.trees == 1 + 1 + 2 + 3 + 6 + 11 + 23);
  CHECK(r.ok());
  CHECK(r.passed == r.instances);
  CHECK(r.tally("linres.class_iff_oracle_linear").first == r.trees);
}

TEST_CASE("verify: betti reports claim checks separately from failures") {
  const VerificationReport r = verify(Suite::Betti, 8);
  CHECK(r.ok());
  const ClaimTally* c = r.claim("betti.c_formula");
  REQUIRE(c != nullptr);
  CHECK(c->checked == r.trees);
  CHECK(c->agree == c->checked);
  CHECK(r.tally("betti.induced_monotone").first == 100);
}

TEST_CASE("verify: the degree-3 deletion statement fails and the report says where") {
  const VerificationReport r = verify(Suite::Deletion, 6);
  CHECK_FALSE(r.ok());
  CHECK(r.passed + r.failures.size() == r.instances);
  for (const auto& f : r.failures) CHECK(f.claim == "deletion.degree3");
  // The broom on five vertices (P4 plus a leaf at an inner vertex) is the smallest witness.
  CHECK(r.failures.front().n == 5);
}

TEST_CASE("verify output is deterministic across thread counts") {
  const auto a = to_json(verify(Suite::All, 7, 1)).dump();
  const auto b = to_json(verify(Suite::All, 7, 3)).dump();
  CHECK(a == b);
}

TEST_CASE("analyze report for T1") {
  const auto j = analyze(t1());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool_version", "input", "class", "invariants", "betti_table", "claim_checks",
                                         "failures"});
  CHECK(j["class"]["tag"] == "NotLinear");
  CHECK(j["invariants"]["b"] == 8);
  CHECK(j["invariants"]["c"] == 1);
  CHECK(j["invariants"]["reg"] == 2);
  CHECK(j["invariants"]["b_formula"] == 8);
  CHECK(j["invariants"]["c_formula"] == 1);
  CHECK(j["invariants"]["gaps"].size() == 1);
  CHECK(j["betti_table"][0] == nlohmann::ordered_json::array({0, 0, 1}));
  CHECK(j["failures"].empty());
}

TEST_CASE("analyze report for named trees") {
  const auto star = analyze(star_graph(4));
  CHECK(star["class"]["tag"] == "Star");
  CHECK(star["invariants"]["linear_resolution"] == true);
  const auto p5 = analyze(path_graph(5));
  CHECK(p5["class"]["tag"] == "PathAtMost5");
  CHECK(p5["invariants"]["reg"] == 1);
  const auto big = analyze(path_graph(20));
  CHECK(big["invariants"]["oracle"] == false);
  CHECK(big["betti_table"].empty());
  CHECK_THROWS_AS(analyze(cycle_graph(5)), GraphError);
  CHECK_THROWS_AS(analyze(path_graph(kMaxAnalyzeOrder + 1)), SizeLimitError);
  CHECK(render_text(analyze(t1())).find("class: NotLinear") != std::string::npos);
}
