#ifndef PLANARMATCH_ORACLES_HPP
#define PLANARMATCH_ORACLES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "planarmatch/flow_network.hpp"
#include "planarmatch/matching.hpp"

namespace planarmatch::oracle {

// Brute-force references used by tests and --oracle cross-checks.  These
// deliberately ignore the embedding: they read only endpoints and weights,
// so they share no machinery with the solvers they audit.  Size guards
// throw TooLarge instead of silently truncating.

/// All perfect matchings, by backtracking on the lowest-id uncovered vertex.
std::vector<Matching> enumerate_perfect_matchings(const EmbeddedGraph& g, int max_n = 16);

std::optional<Matching> some_perfect_matching(const EmbeddedGraph& g, int max_n = 16);

MatchWeight brute_min_pm(const EmbeddedGraph& g, const Weights& w, int max_n = 16);

/// Minimum weight over matchings that miss exactly `missing`.
MatchWeight brute_min_almost_pm(const EmbeddedGraph& g, const Weights& w, VertexId missing,
                                int max_n = 17);

/// True iff G-v has a perfect matching for every v.
bool factor_critical_check(const EmbeddedGraph& g, int max_n = 15);

/// Maximum-weight (not necessarily perfect) matching; with unit weights this
/// is maximum cardinality.  Bitmask DP, so n <= 20.
std::pair<std::int64_t, Matching> brute_max_weight_matching(const EmbeddedGraph& g,
                                                            const Weights& w, int max_n = 20);

/// Length of the shortest simple alternating path from s to t w.r.t. m that
/// starts with an unmatched edge and ends with a matched one; nullopt if none.
std::optional<int> brute_shortest_alternating(const EmbeddedGraph& g, const Matching& m,
                                              VertexId s, VertexId t, int max_n = 14);

/// Optimal f-factor weight (and one witness) by backtracking over edges.
/// Self-loops add 2 to the degree of their vertex.
std::optional<std::pair<std::int64_t, std::vector<EdgeId>>> brute_f_factor(
    const EmbeddedGraph& g, const std::vector<int>& f, const Weights& w, bool maximize,
    int max_m = 26);

/// Min-cost flow meeting all demands exactly (sum of demands must be 0);
/// nullopt when infeasible.  Successive shortest augmenting paths.
std::optional<IntegralFlow> brute_min_cost_flow(const FlowNetwork& net);

/// Maximum multiple-source multiple-sink flow value; per-source outflow is
/// capped by demand(v), per-sink inflow by -demand(v).
IntegralFlow brute_max_flow(const FlowNetwork& net);

/// Vertex potentials and blossom potentials, stored doubled so that
/// half-integral duals stay exact in integers.
struct DualCertificate {
    std::vector<std::int64_t> pi2_vertex;  // 2 * pi_v
    std::vector<std::pair<std::vector<VertexId>, std::int64_t>> pi2_blossom;  // 2 * pi_U
};

/// Checks feasibility, tightness of every matching edge, blossom respect for
/// positive odd sets, and that the dual objective equals w(m).
bool verify_dual(const EmbeddedGraph& g, const Weights& w, const DualCertificate& cert,
                 const Matching& m);

/// Tries to complete a given laminar blossom family to a feasible optimal
/// dual by solving the all-edges-tight linear system in rationals and
/// scanning up to two leftover degrees of freedom over half-integers.
/// Intended for all-allowed instances with n <= 8.
std::optional<DualCertificate> search_dual_completion(
    const EmbeddedGraph& g, const Weights& w,
    const std::vector<std::vector<VertexId>>& blossoms, const Matching& min_pm);

}  // namespace planarmatch::oracle

#endif
