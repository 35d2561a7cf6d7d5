#ifndef EDGEIDEAL_REPORT_HPP
#define EDGEIDEAL_REPORT_HPP

#include <string>

#include <json.hpp>

#include "edgeideal/betti.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Largest tree accepted by analyze(); its line graph must fit the bitmask searches.
inline constexpr int kMaxAnalyzeOrder = kMaxMaskOrder + 1;

/// Full per-tree report with keys tool_version, input, class, invariants,
/// betti_table, claim_checks, failures (in that order). Exponential parts
/// (Hochster oracle, exact searches, suite checks) are included only when
/// L(T) has at most kMaxBettiOrder vertices. Throws GraphError for non-trees
/// and SizeLimitError above kMaxAnalyzeOrder vertices.
nlohmann::ordered_json analyze(const Graph& tree);

/// Plain-text rendering of analyze() for terminals.
std::string render_text(const nlohmann::ordered_json& report);

/// betti_table rows [i, j, beta] sorted by (i, j).
nlohmann::ordered_json betti_rows(const BettiTable& table);

}  // namespace edgeideal

#endif  // EDGEIDEAL_REPORT_HPP
