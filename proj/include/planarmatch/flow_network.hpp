#ifndef PLANARMATCH_FLOW_NETWORK_HPP
#define PLANARMATCH_FLOW_NETWORK_HPP

#include <cstdint>
#include <vector>

#include "planarmatch/embedded_graph.hpp"

namespace planarmatch {

/// Directed planar flow network.  Edge e runs from g.ends(e)[0] to
/// g.ends(e)[1]; the embedded graph carries the planar rotation system.
/// Sources have demand > 0, sinks < 0.
struct FlowNetwork {
    EmbeddedGraph g;
    std::vector<std::int64_t> capacity;  // per edge, >= 1
    std::vector<std::int64_t> cost;      // per edge, >= 0
    std::vector<std::int64_t> demand;    // per vertex

    VertexId tail(EdgeId e) const { return g.ends(e)[0]; }
    VertexId head(EdgeId e) const { return g.ends(e)[1]; }

    void validate() const {
        if (static_cast<int>(capacity.size()) != g.num_edges() ||
            static_cast<int>(cost.size()) != g.num_edges() ||
            static_cast<int>(demand.size()) != g.num_vertices())
            throw InvalidParams("flow network: table sizes do not match the graph");
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (g.is_self_loop(e)) throw InvalidParams("flow network: self-loops not supported");
            if (capacity[e] < 1) throw InvalidParams("flow network: capacities must be >= 1");
            if (cost[e] < 0) throw InvalidParams("flow network: costs must be >= 0");
        }
    }
};

struct IntegralFlow {
    std::vector<std::int64_t> flow;  // per edge, 0 <= flow <= capacity
    std::int64_t total_cost = 0;
    std::int64_t value = 0;  // total net outflow of the sources

    /// Conservation slack at v: outflow - inflow.
    static std::int64_t net_out(const FlowNetwork& net, const std::vector<std::int64_t>& f,
                                VertexId v) {
        std::int64_t s = 0;
        for (EdgeId e = 0; e < net.g.num_edges(); ++e) {
            if (net.tail(e) == v) s += f[e];
            if (net.head(e) == v) s -= f[e];
        }
        return s;
    }
};

}  // namespace planarmatch

#endif
