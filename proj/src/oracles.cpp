#include "planarmatch/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <queue>

#include "planarmatch/laminar.hpp"

namespace planarmatch::oracle {

namespace {

void check_size(int n, int max_n, const char* who) {
    if (n > max_n)
        throw TooLarge(std::string(who) + ": instance exceeds the oracle size guard");
}

void enumerate_rec(const EmbeddedGraph& g, std::vector<char>& covered, Matching& cur,
                   std::vector<Matching>& out, bool stop_at_first) {
    int v = -1;
    for (int i = 0; i < g.num_vertices(); ++i)
        if (!covered[i]) {
            v = i;
            break;
        }
    if (v < 0) {
        out.push_back(sorted_matching(cur));
        return;
    }
    for (EdgeId e : g.incident_edges(v)) {
        if (g.is_self_loop(e)) continue;
        VertexId u = g.opposite(e, v);
        if (covered[u]) continue;
        covered[v] = covered[u] = 1;
        cur.push_back(e);
        enumerate_rec(g, covered, cur, out, stop_at_first);
        cur.pop_back();
        covered[v] = covered[u] = 0;
        if (stop_at_first && !out.empty()) return;
    }
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const EmbeddedGraph& g, int max_n) {
    check_size(g.num_vertices(), max_n, "enumerate_perfect_matchings");
    if (g.num_vertices() % 2 == 1) return {};
    std::vector<char> covered(g.num_vertices(), 0);
    Matching cur;
    std::vector<Matching> out;
    enumerate_rec(g, covered, cur, out, false);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Matching> some_perfect_matching(const EmbeddedGraph& g, int max_n) {
    check_size(g.num_vertices(), max_n, "some_perfect_matching");
    if (g.num_vertices() % 2 == 1) return std::nullopt;
    std::vector<char> covered(g.num_vertices(), 0);
    Matching cur;
    std::vector<Matching> out;
    enumerate_rec(g, covered, cur, out, true);
    if (out.empty()) return std::nullopt;
    return out.front();
}

MatchWeight brute_min_pm(const EmbeddedGraph& g, const Weights& w, int max_n) {
    check_size(g.num_vertices(), max_n, "brute_min_pm");
    MatchWeight best = kUnreachable;
    for (const Matching& m : enumerate_perfect_matchings(g, max_n)) {
        std::int64_t val = matching_weight(w, m);
        if (!best || val < *best) best = val;
    }
    return best;
}

MatchWeight brute_min_almost_pm(const EmbeddedGraph& g, const Weights& w, VertexId missing,
                                int max_n) {
    check_size(g.num_vertices(), max_n, "brute_min_almost_pm");
    auto [h, map] = delete_vertices(g, {missing});
    Weights hw;
    for (EdgeId e = 0; e < h.num_edges(); ++e) hw.push_back(w[map.edge_to_parent[e]]);
    return brute_min_pm(h, hw, max_n);
}

bool factor_critical_check(const EmbeddedGraph& g, int max_n) {
    check_size(g.num_vertices(), max_n, "factor_critical_check");
    if (g.num_vertices() % 2 == 0) return false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto [h, map] = delete_vertices(g, {v});
        if (!some_perfect_matching(h, max_n)) return false;
    }
    return true;
}

std::pair<std::int64_t, Matching> brute_max_weight_matching(const EmbeddedGraph& g,
                                                            const Weights& w, int max_n) {
    const int n = g.num_vertices();
    check_size(n, max_n, "brute_max_weight_matching");
    std::vector<std::int64_t> dp(std::size_t(1) << n, -1);
    // dp[mask] = best weight of a matching inside the vertex set `mask`.
    auto rec = [&](auto&& self, std::uint32_t mask) -> std::int64_t {
        if (mask == 0) return 0;
        std::int64_t& memo = dp[mask];
        if (memo >= 0) return memo;
        int v = std::countr_zero(mask);
        std::int64_t best = self(self, mask & ~(1u << v));  // leave v exposed
        for (EdgeId e : g.incident_edges(v)) {
            if (g.is_self_loop(e)) continue;
            VertexId u = g.opposite(e, v);
            if (u == v || !(mask >> u & 1)) continue;
            best = std::max(best, w[e] + self(self, mask & ~(1u << v) & ~(1u << u)));
        }
        return memo = best;
    };
    std::uint32_t full = (1u << n) - 1;
    std::int64_t best = rec(rec, full);
    Matching m;
    std::uint32_t mask = full;
    while (mask) {
        int v = std::countr_zero(mask);
        if (rec(rec, mask) == rec(rec, mask & ~(1u << v))) {
            mask &= ~(1u << v);
            continue;
        }
        for (EdgeId e : g.incident_edges(v)) {
            if (g.is_self_loop(e)) continue;
            VertexId u = g.opposite(e, v);
            if (u == v || !(mask >> u & 1)) continue;
            std::uint32_t next = mask & ~(1u << v) & ~(1u << u);
            if (rec(rec, mask) == w[e] + rec(rec, next)) {
                m.push_back(e);
                mask = next;
                break;
            }
        }
    }
    return {best, sorted_matching(m)};
}

std::optional<int> brute_shortest_alternating(const EmbeddedGraph& g, const Matching& m,
                                              VertexId s, VertexId t, int max_n) {
    check_size(g.num_vertices(), max_n, "brute_shortest_alternating");
    std::vector<char> in_m(g.num_edges(), 0);
    for (EdgeId e : m) in_m[e] = 1;
    std::vector<char> used(g.num_vertices(), 0);
    int best = -1;
    auto dfs = [&](auto&& self, VertexId v, bool need_matched, int len) -> void {
        if (best >= 0 && len >= best) return;
        used[v] = 1;
        for (EdgeId e : g.incident_edges(v)) {
            if (g.is_self_loop(e) || static_cast<bool>(in_m[e]) != need_matched) continue;
            VertexId u = g.opposite(e, v);
            if (used[u]) continue;
            if (u == t) {
                if (need_matched && (best < 0 || len + 1 < best)) best = len + 1;
                continue;
            }
            self(self, u, !need_matched, len + 1);
        }
        used[v] = 0;
    };
    dfs(dfs, s, false, 0);
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<std::pair<std::int64_t, std::vector<EdgeId>>> brute_f_factor(
    const EmbeddedGraph& g, const std::vector<int>& f, const Weights& w, bool maximize,
    int max_m) {
    check_size(g.num_edges(), max_m, "brute_f_factor");
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<int> deg(n, 0), pending(n, 0);
    for (EdgeId e = 0; e < m; ++e) {
        pending[g.ends(e)[0]] += 1;
        pending[g.ends(e)[1]] += 1;  // a self-loop contributes twice
    }
    std::vector<EdgeId> cur, best_set;
    std::optional<std::int64_t> best;
    std::int64_t cur_w = 0;
    auto feasible_v = [&](VertexId v) {
        return deg[v] <= f[v] && deg[v] + pending[v] >= f[v];
    };
    auto rec = [&](auto&& self, EdgeId e) -> void {
        if (e == m) {
            for (VertexId v = 0; v < n; ++v)
                if (deg[v] != f[v]) return;
            if (!best || (maximize ? cur_w > *best : cur_w < *best)) {
                best = cur_w;
                best_set = cur;
            }
            return;
        }
        VertexId a = g.ends(e)[0], b = g.ends(e)[1];
        for (int take = 1; take >= 0; --take) {
            pending[a] -= 1;
            pending[b] -= 1;
            if (take) {
                deg[a] += 1;
                deg[b] += 1;
                cur.push_back(e);
                cur_w += w[e];
            }
            if (feasible_v(a) && feasible_v(b)) self(self, e + 1);
            if (take) {
                deg[a] -= 1;
                deg[b] -= 1;
                cur.pop_back();
                cur_w -= w[e];
            }
            pending[a] += 1;
            pending[b] += 1;
        }
    };
    rec(rec, 0);
    if (!best) return std::nullopt;
    return std::make_pair(*best, best_set);
}

// ---------------------------------------------------------------------------
// Flow oracles: plain residual-graph algorithms, no planarity involved.
// ---------------------------------------------------------------------------

namespace {

struct Residual {
    struct Arc {
        int to;
        std::int64_t cap;
        std::int64_t cost;
        int rev;      // index of the reverse arc in arcs[to]
        EdgeId orig;  // original edge id, -1 for helper arcs
        bool forward;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit Residual(int n) : arcs(n) {}
    void add(int u, int v, std::int64_t cap, std::int64_t cost, EdgeId orig) {
        arcs[u].push_back({v, cap, cost, static_cast<int>(arcs[v].size()), orig, true});
        arcs[v].push_back({u, 0, -cost, static_cast<int>(arcs[u].size()) - 1, orig, false});
    }
};

}  // namespace

std::optional<IntegralFlow> brute_min_cost_flow(const FlowNetwork& net) {
    net.validate();
    const int n = net.g.num_vertices();
    std::int64_t total = std::accumulate(net.demand.begin(), net.demand.end(), std::int64_t{0});
    if (total != 0) throw InvalidParams("min-cost flow: demands must sum to zero");
    std::int64_t supply = 0;
    for (VertexId v = 0; v < n; ++v)
        if (net.demand[v] > 0) supply += net.demand[v];

    const int S = n, T = n + 1;
    Residual r(n + 2);
    for (EdgeId e = 0; e < net.g.num_edges(); ++e)
        r.add(net.tail(e), net.head(e), net.capacity[e], net.cost[e], e);
    for (VertexId v = 0; v < n; ++v) {
        if (net.demand[v] > 0) r.add(S, v, net.demand[v], 0, -1);
        if (net.demand[v] < 0) r.add(v, T, -net.demand[v], 0, -1);
    }

    std::int64_t routed = 0, cost = 0;
    while (routed < supply) {
        const std::int64_t INF = INT64_MAX / 4;
        std::vector<std::int64_t> dist(n + 2, INF);
        std::vector<std::pair<int, int>> pre(n + 2, {-1, -1});
        dist[S] = 0;
        for (int round = 0; round < n + 2; ++round) {
            bool changed = false;
            for (int u = 0; u < n + 2; ++u) {
                if (dist[u] >= INF) continue;
                for (int i = 0; i < static_cast<int>(r.arcs[u].size()); ++i) {
                    const auto& a = r.arcs[u][i];
                    if (a.cap <= 0 || dist[u] + a.cost >= dist[a.to]) continue;
                    dist[a.to] = dist[u] + a.cost;
                    pre[a.to] = {u, i};
                    changed = true;
                }
            }
            if (!changed) break;
        }
        if (dist[T] >= INF) break;
        std::int64_t push = supply - routed;
        for (int v = T; v != S; v = pre[v].first)
            push = std::min(push, r.arcs[pre[v].first][pre[v].second].cap);
        for (int v = T; v != S; v = pre[v].first) {
            auto& a = r.arcs[pre[v].first][pre[v].second];
            a.cap -= push;
            r.arcs[a.to][a.rev].cap += push;
        }
        routed += push;
        cost += push * dist[T];
    }
    if (routed < supply) return std::nullopt;

    IntegralFlow out;
    out.flow.assign(net.g.num_edges(), 0);
    for (int u = 0; u < n; ++u)
        for (const auto& a : r.arcs[u])
            if (a.orig >= 0 && !a.forward) out.flow[a.orig] = a.cap;  // reverse cap = flow
    out.total_cost = cost;
    out.value = supply;
    return out;
}

IntegralFlow brute_max_flow(const FlowNetwork& net) {
    net.validate();
    const int n = net.g.num_vertices();
    const int S = n, T = n + 1;
    Residual r(n + 2);
    for (EdgeId e = 0; e < net.g.num_edges(); ++e)
        r.add(net.tail(e), net.head(e), net.capacity[e], 0, e);
    for (VertexId v = 0; v < n; ++v) {
        if (net.demand[v] > 0) r.add(S, v, net.demand[v], 0, -1);
        if (net.demand[v] < 0) r.add(v, T, -net.demand[v], 0, -1);
    }
    std::int64_t value = 0;
    while (true) {
        std::vector<std::pair<int, int>> pre(n + 2, {-1, -1});
        std::vector<char> seen(n + 2, 0);
        std::queue<int> q;
        q.push(S);
        seen[S] = 1;
        while (!q.empty() && !seen[T]) {
            int u = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(r.arcs[u].size()); ++i) {
                const auto& a = r.arcs[u][i];
                if (a.cap <= 0 || seen[a.to]) continue;
                seen[a.to] = 1;
                pre[a.to] = {u, i};
                q.push(a.to);
            }
        }
        if (!seen[T]) break;
        std::int64_t push = INT64_MAX;
        for (int v = T; v != S; v = pre[v].first)
            push = std::min(push, r.arcs[pre[v].first][pre[v].second].cap);
        for (int v = T; v != S; v = pre[v].first) {
            auto& a = r.arcs[pre[v].first][pre[v].second];
            a.cap -= push;
            r.arcs[a.to][a.rev].cap += push;
        }
        value += push;
    }
    IntegralFlow out;
    out.flow.assign(net.g.num_edges(), 0);
    for (int u = 0; u < n; ++u)
        for (const auto& a : r.arcs[u])
            if (a.orig >= 0 && !a.forward) out.flow[a.orig] = a.cap;
    out.value = value;
    for (EdgeId e = 0; e < net.g.num_edges(); ++e) out.total_cost += out.flow[e] * net.cost[e];
    return out;
}

// ---------------------------------------------------------------------------
// Dual certificates
// ---------------------------------------------------------------------------

bool verify_dual(const EmbeddedGraph& g, const Weights& w, const DualCertificate& cert,
                 const Matching& m) {
    const int n = g.num_vertices();
    if (static_cast<int>(cert.pi2_vertex.size()) != n) return false;
    if (!is_perfect_matching(g, m)) return false;

    std::vector<std::vector<VertexId>> sets;
    for (const auto& [set, pi2] : cert.pi2_blossom) {
        if (pi2 < 0) return false;
        if (set.size() < 3 || set.size() % 2 == 0) return false;
        sets.push_back(set);
    }
    try {
        LaminarTree check(n, sets);
    } catch (const InvalidParams&) {
        return false;
    }

    std::vector<std::vector<char>> in_set;
    for (const auto& [set, pi2] : cert.pi2_blossom) {
        std::vector<char> mark(n, 0);
        for (VertexId v : set) mark[v] = 1;
        in_set.push_back(std::move(mark));
    }
    auto slack2 = [&](EdgeId e) {
        VertexId u = g.ends(e)[0], v = g.ends(e)[1];
        std::int64_t lhs = cert.pi2_vertex[u] + cert.pi2_vertex[v];
        for (std::size_t i = 0; i < cert.pi2_blossom.size(); ++i)
            if (in_set[i][u] != in_set[i][v]) lhs += cert.pi2_blossom[i].second;
        return 2 * w[e] - lhs;
    };
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.is_self_loop(e)) continue;
        if (slack2(e) < 0) return false;
    }
    for (EdgeId e : m)
        if (slack2(e) != 0) return false;
    for (std::size_t i = 0; i < cert.pi2_blossom.size(); ++i)
        if (cert.pi2_blossom[i].second > 0 &&
            boundary_count(g, m, cert.pi2_blossom[i].first) != 1)
            return false;

    std::int64_t obj2 = 0;
    for (VertexId v = 0; v < n; ++v) obj2 += cert.pi2_vertex[v];
    for (const auto& [set, pi2] : cert.pi2_blossom) obj2 += pi2;
    return obj2 == 2 * matching_weight(w, m);
}

namespace {

struct Frac {
    std::int64_t num = 0, den = 1;
    Frac() = default;
    Frac(std::int64_t n) : num(n) {}
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { norm(); }
    void norm() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
    friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
    bool zero() const { return num == 0; }
};

}  // namespace

std::optional<DualCertificate> search_dual_completion(
    const EmbeddedGraph& g, const Weights& w,
    const std::vector<std::vector<VertexId>>& blossoms, const Matching& min_pm) {
    const int n = g.num_vertices();
    const int k = static_cast<int>(blossoms.size());
    const int cols = n + k;

    std::vector<std::vector<char>> in_set;
    for (const auto& set : blossoms) {
        std::vector<char> mark(n, 0);
        for (VertexId v : set) mark[v] = 1;
        in_set.push_back(std::move(mark));
    }

    // All-edges-tight system over (pi_v, pi_U).
    std::vector<std::vector<Frac>> rows;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.is_self_loop(e)) continue;
        std::vector<Frac> row(cols + 1);
        row[g.ends(e)[0]] = row[g.ends(e)[0]] + Frac(1);
        row[g.ends(e)[1]] = row[g.ends(e)[1]] + Frac(1);
        for (int i = 0; i < k; ++i)
            if (in_set[i][g.ends(e)[0]] != in_set[i][g.ends(e)[1]])
                row[n + i] = row[n + i] + Frac(1);
        row[cols] = Frac(w[e]);
        rows.push_back(std::move(row));
    }

    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][c].zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        Frac inv = Frac(1) / rows[rank][c];
        for (int j = c; j <= cols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c].zero()) continue;
            Frac f = rows[r][c];
            for (int j = c; j <= cols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (!rows[r][cols].zero()) return std::nullopt;  // inconsistent

    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    if (free_cols.size() > 2) return std::nullopt;

    std::int64_t wmax = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) wmax = std::max(wmax, w[e]);
    std::vector<std::int64_t> grid;  // doubled candidate values
    for (std::int64_t x = -4 * wmax; x <= 4 * wmax; ++x) grid.push_back(x);

    std::vector<std::int64_t> assign2(free_cols.size(), 0);
    auto try_assignment = [&]() -> std::optional<DualCertificate> {
        std::vector<Frac> x(cols);
        for (std::size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = Frac(assign2[i], 2);
        for (int c = cols - 1; c >= 0; --c) {
            int r = pivot_of_col[c];
            if (r < 0) continue;
            Frac val = rows[r][cols];
            for (int j = c + 1; j < cols; ++j)
                if (!rows[r][j].zero()) val = val - rows[r][j] * x[j];
            x[c] = val;
        }
        DualCertificate cert;
        cert.pi2_vertex.resize(n);
        for (int v = 0; v < n; ++v) {
            Frac d = x[v] * Frac(2);
            if (d.den != 1) return std::nullopt;  // not half-integral
            cert.pi2_vertex[v] = d.num;
        }
        for (int i = 0; i < k; ++i) {
            Frac d = x[n + i] * Frac(2);
            if (d.den != 1 || d.num < 0) return std::nullopt;
            cert.pi2_blossom.push_back({blossoms[i], d.num});
        }
        if (verify_dual(g, w, cert, min_pm)) return cert;
        return std::nullopt;
    };

    if (free_cols.empty()) return try_assignment();
    if (free_cols.size() == 1) {
        for (std::int64_t a : grid) {
            assign2[0] = a;
            if (auto c = try_assignment()) return c;
        }
        return std::nullopt;
    }
    for (std::int64_t a : grid)
        for (std::int64_t b : grid) {
            assign2[0] = a;
            assign2[1] = b;
            if (auto c = try_assignment()) return c;
        }
    return std::nullopt;
}

}  // namespace planarmatch::oracle
