#ifndef PLANARMATCH_MATCHING_HPP
#define PLANARMATCH_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "planarmatch/embedded_graph.hpp"

namespace planarmatch {

/// An independent set of edges, kept sorted by edge id.
using Matching = std::vector<EdgeId>;

/// Weight of a matching or UNREACHABLE when a required matching is absent.
using MatchWeight = std::optional<std::int64_t>;

inline constexpr std::nullopt_t kUnreachable = std::nullopt;

inline bool is_valid_matching(const EmbeddedGraph& g, const Matching& m) {
    std::vector<char> hit(g.num_vertices(), 0);
    for (EdgeId e : m) {
        if (e < 0 || e >= g.num_edges()) return false;
        if (g.is_self_loop(e)) return false;
        for (VertexId v : g.ends(e)) {
            if (hit[v]) return false;
            hit[v] = 1;
        }
    }
    return true;
}

inline bool is_perfect_matching(const EmbeddedGraph& g, const Matching& m) {
    return is_valid_matching(g, m) && static_cast<int>(2 * m.size()) == g.num_vertices();
}

/// Valid matching covering every vertex except `missing`.
inline bool is_almost_perfect_matching(const EmbeddedGraph& g, const Matching& m,
                                       VertexId missing) {
    if (!is_valid_matching(g, m)) return false;
    if (static_cast<int>(2 * m.size()) != g.num_vertices() - 1) return false;
    for (EdgeId e : m)
        if (g.ends(e)[0] == missing || g.ends(e)[1] == missing) return false;
    return true;
}

inline std::int64_t matching_weight(const Weights& w, const Matching& m) {
    std::int64_t total = 0;
    for (EdgeId e : m) total += w[e];
    return total;
}

inline Matching sorted_matching(Matching m) {
    std::sort(m.begin(), m.end());
    return m;
}

/// |m ∩ delta(U)| for a vertex set U.
inline int boundary_count(const EmbeddedGraph& g, const Matching& m,
                          const std::vector<VertexId>& set) {
    std::vector<char> in(g.num_vertices(), 0);
    for (VertexId v : set) in[v] = 1;
    int cnt = 0;
    for (EdgeId e : m)
        if (in[g.ends(e)[0]] != in[g.ends(e)[1]]) ++cnt;
    return cnt;
}

}  // namespace planarmatch

#endif
