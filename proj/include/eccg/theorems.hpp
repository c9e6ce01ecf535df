#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "eccg/graph.hpp"

namespace eccg {

// Every eccentricity lies in {2,3} and no two eccentricity-3 vertices are
// at distance exactly 2. Defined true for the one-vertex graph. Requires a
// connected graph.
bool corrected_condition(const Graph& g);

// Every eccentricity lies in {2,3} and no two eccentricity-3 vertices
// share a common neighbor. Strictly stronger than corrected_condition.
bool akiyama_condition(const Graph& g);

// True iff the eccentric graph is isomorphic to the complement.
bool ecc_iso_complement(const Graph& g);

struct Violation {
  std::string graph6;
  std::string detail;
};

struct VerificationReport {
  std::string campaign;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  std::uint64_t checked = 0;
  std::vector<Violation> violations;       // sorted by graph6, capped
  std::vector<std::string> findings;       // canonical graph6, deduped
  std::vector<std::string> anomalies;
  std::int64_t elapsed_ms = 0;
  // search campaigns: how many labeled instances sit behind `findings`
  std::optional<std::uint64_t> findings_labeled;

  bool passed() const { return violations.empty(); }
  nlohmann::ordered_json to_json() const;
};

struct CampaignOptions {
  int threads = 0;  // 0: hardware default
  std::size_t violation_cap = 100;
};

// For every labeled connected graph with 2 <= n <= max_n (max_n <= 7),
// asserts corrected_condition(g) == ecc_iso_complement(g).
VerificationReport verify_theorem2(int max_n, const CampaignOptions& opt = {});

// For every free tree with n <= max_n (max_n <= 18): the eccentric graph is
// connected with diameter <= 3, never exceeding the tree's own diameter;
// two-center trees on >= 3 vertices reach diameter exactly 3.
VerificationReport verify_tree_diameter_bound(int max_n,
                                              const CampaignOptions& opt = {});

// For every two-center free tree with n <= max_n (max_n <= 14), the
// eccentric graph equals (same labels) the predicted coclique extension of
// the 4-path. `pinned` trees are checked first.
VerificationReport verify_two_center_structure(int max_n,
                                               std::span<const Graph> pinned = {},
                                               const CampaignOptions& opt = {});

// For every one-center free tree with diameter >= 4 and n <= max_n
// (max_n <= 14): a pairwise-diametrical leaf triple exists iff the
// eccentric graph is 2-self-centered, and without a triple its diameter is
// exactly 3. Stars (diameter 2) land in the anomaly list: the triple exists
// yet their eccentric graph is complete.
VerificationReport verify_lemma5(int max_n, const CampaignOptions& opt = {});

// Predicted eccentric graphs of the standard families, all parameters up
// to max_param: complete -> itself, star -> complete, even cycle ->
// disjoint edges, odd cycle -> itself, even path -> double star, odd path
// -> pendant triangle, complete bipartite (both parts >= 2) -> disjoint
// union of two completes.
VerificationReport verify_table1(int max_param, const CampaignOptions& opt = {});

// Connected labeled graphs (n <= max_n <= 7) whose eccentric graph is
// isomorphic to the complement while some two eccentricity-3 vertices
// share a neighbor. Findings failing corrected_condition would be recorded
// as violations.
VerificationReport search_akiyama_gap(int max_n, const CampaignOptions& opt = {});

// Connected labeled graphs with diameter(g) == diameter(ecc(g)). Also
// asserts diameter(ecc(g)) <= diameter(g) whenever ecc(g) is connected.
VerificationReport search_problem1(int max_n, const CampaignOptions& opt = {});

// Connected labeled graphs isomorphic to their own eccentric graph.
VerificationReport search_problem2(int max_n, const CampaignOptions& opt = {});

// Pins the 3x4 grid: its eccentric graph has diameter 5 (as does the grid)
// and is isomorphic to the transcription passed in.
VerificationReport grid_fixture_check(const Graph& transcribed_ecc);

}  // namespace eccg
