#include "planarmatch/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace planarmatch {

EmbeddedGraph EmbeddedGraph::build(int num_vertices,
                                   std::vector<std::array<VertexId, 2>> edge_ends,
                                   Weights weights,
                                   std::vector<std::vector<HalfEdge>> rotation) {
    EmbeddedGraph g;
    g.ends_ = std::move(edge_ends);
    g.weight_ = std::move(weights);
    g.rotation_ = std::move(rotation);
    if (static_cast<int>(g.rotation_.size()) != num_vertices)
        throw EmbeddingInvalid("rotation table size does not match vertex count");
    if (g.weight_.size() != g.ends_.size())
        throw EmbeddingInvalid("weight table size does not match edge count");
    g.pos_.assign(2 * g.ends_.size(), -1);
    g.validate();
    return g;
}

void EmbeddedGraph::validate() const {
    const int n = num_vertices();
    const int m = num_edges();
    for (EdgeId e = 0; e < m; ++e) {
        for (int s = 0; s < 2; ++s) {
            VertexId v = ends_[e][s];
            if (v < 0 || v >= n) throw EmbeddingInvalid("edge endpoint out of range");
        }
        if (weight_[e] < 0) throw EmbeddingInvalid("negative edge weight");
    }
    // Every half-edge appears exactly once, at its own endpoint.
    auto* self = const_cast<EmbeddedGraph*>(this);
    std::vector<char> seen(2 * m, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
            HalfEdge h = rotation_[v][i];
            if (h < 0 || h >= 2 * m) throw EmbeddingInvalid("half-edge id out of range");
            if (seen[h]) throw EmbeddingInvalid("half-edge appears twice in rotations");
            seen[h] = 1;
            if (vertex_of(h) != v)
                throw EmbeddingInvalid("half-edge listed at a vertex that is not its endpoint");
            self->pos_[h] = i;
        }
    }
    for (HalfEdge h = 0; h < 2 * m; ++h)
        if (!seen[h]) throw EmbeddingInvalid("half-edge missing from rotations");

    // Genus-0 check: Euler's identity per component with edges.
    if (m > 0) {
        FaceSet fs = trace_faces(*this);
        std::vector<int> comp = component_ids();
        int nc = 1 + *std::max_element(comp.begin(), comp.end());
        std::vector<int> cn(nc, 0), cm(nc, 0), cf(nc, 0);
        for (VertexId v = 0; v < n; ++v) cn[comp[v]]++;
        for (EdgeId e = 0; e < m; ++e) cm[comp[ends_[e][0]]]++;
        for (const auto& face : fs.faces) cf[comp[vertex_of(face[0])]]++;
        for (int c = 0; c < nc; ++c) {
            if (cm[c] == 0) continue;  // isolated vertex
            if (cn[c] - cm[c] + cf[c] != 2)
                throw EmbeddingInvalid("Euler identity failed: rotation system is not planar");
        }
    }
}

HalfEdge EmbeddedGraph::rotation_next(HalfEdge h) const {
    const auto& rot = rotation_[vertex_of(h)];
    int i = pos_[h];
    return rot[(i + 1) % rot.size()];
}

std::vector<int> EmbeddedGraph::component_ids() const {
    const int n = num_vertices();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (VertexId start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        std::queue<VertexId> q;
        q.push(start);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (HalfEdge h : rotation_[v]) {
                VertexId w = other_end(h);
                if (comp[w] < 0) {
                    comp[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int EmbeddedGraph::num_components() const {
    std::vector<int> comp = component_ids();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

std::vector<EdgeId> EmbeddedGraph::incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    out.reserve(rotation_[v].size());
    for (HalfEdge h : rotation_[v]) out.push_back(edge_of(h));
    return out;
}

EmbeddedGraph EmbeddedGraph::with_weights(Weights w) const {
    if (w.size() != ends_.size()) throw InvalidParams("weight vector size mismatch");
    EmbeddedGraph g = *this;
    g.weight_ = std::move(w);
    return g;
}

FaceSet trace_faces(const EmbeddedGraph& g) {
    const int hn = 2 * g.num_edges();
    FaceSet fs;
    fs.face_of.assign(hn, -1);
    std::vector<std::vector<HalfEdge>> orbits;
    for (HalfEdge h0 = 0; h0 < hn; ++h0) {
        if (fs.face_of[h0] >= 0) continue;
        std::vector<HalfEdge> walk;
        HalfEdge h = h0;
        do {
            fs.face_of[h] = static_cast<int>(orbits.size());
            walk.push_back(h);
            h = g.face_next(h);
        } while (h != h0);
        orbits.push_back(std::move(walk));
    }
    // Orbits are discovered in order of their smallest half-edge, so ids are
    // already canonical.
    fs.faces = std::move(orbits);
    return fs;
}

std::vector<VertexId> FaceSet::boundary_vertices(const EmbeddedGraph& g, int f) const {
    std::vector<VertexId> out;
    out.reserve(faces[f].size());
    for (HalfEdge h : faces[f]) out.push_back(g.vertex_of(h));
    return out;
}

bool FaceSet::is_simple(const EmbeddedGraph& g, int f) const {
    std::vector<VertexId> b = boundary_vertices(g, f);
    std::sort(b.begin(), b.end());
    return std::adjacent_find(b.begin(), b.end()) == b.end();
}

DualGraph dual_graph(const EmbeddedGraph& g, const FaceSet& fs) {
    DualGraph d;
    d.num_faces = fs.num_faces();
    d.ends.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) d.ends[e] = fs.sides(e);
    return d;
}

SurgeryMap SurgeryMap::identity(const EmbeddedGraph& g) {
    SurgeryMap m;
    m.vertex_to_parent.resize(g.num_vertices());
    std::iota(m.vertex_to_parent.begin(), m.vertex_to_parent.end(), 0);
    m.edge_to_parent.resize(g.num_edges());
    std::iota(m.edge_to_parent.begin(), m.edge_to_parent.end(), 0);
    return m;
}

SurgeryMap SurgeryMap::composed_with(const SurgeryMap& inner) const {
    SurgeryMap out;
    out.vertex_to_parent.reserve(inner.vertex_to_parent.size());
    for (VertexId v : inner.vertex_to_parent) out.vertex_to_parent.push_back(vertex_to_parent[v]);
    out.edge_to_parent.reserve(inner.edge_to_parent.size());
    for (EdgeId e : inner.edge_to_parent) out.edge_to_parent.push_back(edge_to_parent[e]);
    for (const auto& [sv, set] : inner.contracted) {
        std::vector<VertexId> expanded;
        for (VertexId v : set) {
            auto it = contracted.find(vertex_to_parent[v]);
            if (it != contracted.end())
                expanded.insert(expanded.end(), it->second.begin(), it->second.end());
            else
                expanded.push_back(vertex_to_parent[v]);
        }
        std::sort(expanded.begin(), expanded.end());
        out.contracted[sv] = std::move(expanded);
    }
    // Super-vertices of the outer map that survive untouched in the inner
    // graph keep their contraction record.
    for (int v = 0; v < static_cast<int>(inner.vertex_to_parent.size()); ++v) {
        if (out.contracted.count(v)) continue;
        auto it = contracted.find(inner.vertex_to_parent[v]);
        if (it != contracted.end()) out.contracted[v] = it->second;
    }
    return out;
}

std::vector<EdgeId> SurgeryMap::lift_edges(const std::vector<EdgeId>& derived_edges) const {
    std::vector<EdgeId> out;
    out.reserve(derived_edges.size());
    for (EdgeId e : derived_edges) out.push_back(edge_to_parent[e]);
    return out;
}

namespace {

EmbeddedGraph rebuild(const EmbeddedGraph& g, const std::vector<char>& keep_vertex,
                      const std::vector<char>& keep_edge, SurgeryMap& map_out) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<VertexId> new_vid(n, -1);
    std::vector<EdgeId> new_eid(m, -1);
    map_out.vertex_to_parent.clear();
    map_out.edge_to_parent.clear();
    for (VertexId v = 0; v < n; ++v) {
        if (!keep_vertex[v]) continue;
        new_vid[v] = static_cast<int>(map_out.vertex_to_parent.size());
        map_out.vertex_to_parent.push_back(v);
    }
    std::vector<std::array<VertexId, 2>> ends;
    Weights w;
    for (EdgeId e = 0; e < m; ++e) {
        if (!keep_edge[e]) continue;
        new_eid[e] = static_cast<int>(map_out.edge_to_parent.size());
        map_out.edge_to_parent.push_back(e);
        ends.push_back({new_vid[g.ends(e)[0]], new_vid[g.ends(e)[1]]});
        w.push_back(g.weight(e));
    }
    std::vector<std::vector<HalfEdge>> rot(map_out.vertex_to_parent.size());
    for (VertexId v = 0; v < n; ++v) {
        if (!keep_vertex[v]) continue;
        for (HalfEdge h : g.rotation(v)) {
            EdgeId e = EmbeddedGraph::edge_of(h);
            if (!keep_edge[e]) continue;
            rot[new_vid[v]].push_back(EmbeddedGraph::half(new_eid[e], EmbeddedGraph::side_of(h)));
        }
    }
    return EmbeddedGraph::build(static_cast<int>(map_out.vertex_to_parent.size()),
                                std::move(ends), std::move(w), std::move(rot));
}

}  // namespace

std::pair<EmbeddedGraph, SurgeryMap> delete_edges(const EmbeddedGraph& g,
                                                  const std::vector<EdgeId>& edges) {
    std::vector<char> keep_v(g.num_vertices(), 1), keep_e(g.num_edges(), 1);
    for (EdgeId e : edges) keep_e[e] = 0;
    SurgeryMap map;
    EmbeddedGraph out = rebuild(g, keep_v, keep_e, map);
    return {std::move(out), std::move(map)};
}

std::pair<EmbeddedGraph, SurgeryMap> delete_vertices(const EmbeddedGraph& g,
                                                     const std::vector<VertexId>& verts) {
    std::vector<char> keep_v(g.num_vertices(), 1), keep_e(g.num_edges(), 1);
    for (VertexId v : verts) keep_v[v] = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!keep_v[g.ends(e)[0]] || !keep_v[g.ends(e)[1]]) keep_e[e] = 0;
    SurgeryMap map;
    EmbeddedGraph out = rebuild(g, keep_v, keep_e, map);
    return {std::move(out), std::move(map)};
}

std::pair<EmbeddedGraph, SurgeryMap> contract_vertex_set(const EmbeddedGraph& g,
                                                         const std::vector<VertexId>& s) {
    if (s.empty()) throw InvalidParams("contract_vertex_set: empty set");
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<char> in_s(n, 0);
    for (VertexId v : s) in_s[v] = 1;

    // Connectivity of the induced subgraph.
    {
        std::queue<VertexId> q;
        std::vector<char> vis(n, 0);
        VertexId start = *std::min_element(s.begin(), s.end());
        vis[start] = 1;
        q.push(start);
        int reached = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (HalfEdge h : g.rotation(v)) {
                VertexId w = g.other_end(h);
                if (in_s[w] && !vis[w]) {
                    vis[w] = 1;
                    ++reached;
                    q.push(w);
                }
            }
        }
        if (reached != static_cast<int>(std::set<VertexId>(s.begin(), s.end()).size()))
            throw ContractionDisconnected("contracted set induces a disconnected subgraph");
    }

    VertexId rep = *std::min_element(s.begin(), s.end());

    // New vertex ids: old order with the whole set collapsed onto rep's slot.
    std::vector<VertexId> new_vid(n, -1);
    SurgeryMap map;
    VertexId super = -1;
    for (VertexId v = 0; v < n; ++v) {
        if (in_s[v] && v != rep) continue;
        new_vid[v] = static_cast<int>(map.vertex_to_parent.size());
        map.vertex_to_parent.push_back(v);
        if (v == rep) super = new_vid[v];
    }

    std::vector<EdgeId> new_eid(m, -1);
    std::vector<std::array<VertexId, 2>> ends;
    Weights w;
    for (EdgeId e = 0; e < m; ++e) {
        bool a = in_s[g.ends(e)[0]], b = in_s[g.ends(e)[1]];
        if (a && b) continue;  // dropped, incl. self-loops inside s
        new_eid[e] = static_cast<int>(map.edge_to_parent.size());
        map.edge_to_parent.push_back(e);
        VertexId u0 = a ? super : new_vid[g.ends(e)[0]];
        VertexId u1 = b ? super : new_vid[g.ends(e)[1]];
        ends.push_back({u0, u1});
        w.push_back(g.weight(e));
    }

    std::vector<std::vector<HalfEdge>> rot(map.vertex_to_parent.size());
    for (VertexId v = 0; v < n; ++v) {
        if (in_s[v]) continue;
        for (HalfEdge h : g.rotation(v)) {
            EdgeId e = EmbeddedGraph::edge_of(h);
            if (new_eid[e] < 0) continue;
            rot[new_vid[v]].push_back(EmbeddedGraph::half(new_eid[e], EmbeddedGraph::side_of(h)));
        }
    }

    // Rotation of the super-vertex: contour walks around S.  From a boundary
    // half-edge at the S side, turn at its vertex; interior edges are crossed
    // to continue the walk on the far side.  When S separates the plane there
    // is one closed contour per region holding outside vertices; each becomes
    // a contiguous block of the rotation.
    std::vector<HalfEdge> boundary;
    for (HalfEdge h = 0; h < 2 * m; ++h)
        if (in_s[g.vertex_of(h)] && !in_s[g.other_end(h)]) boundary.push_back(h);
    if (!boundary.empty()) {
        std::vector<char> used(2 * m, 0);
        std::vector<HalfEdge>& sr = rot[super];
        for (HalfEdge h0 : boundary) {
            if (used[h0]) continue;
            HalfEdge h = h0;
            do {
                used[h] = 1;
                EdgeId e = EmbeddedGraph::edge_of(h);
                sr.push_back(EmbeddedGraph::half(new_eid[e], EmbeddedGraph::side_of(h)));
                // Advance to the next boundary half-edge around S.
                HalfEdge x = g.rotation_next(h);
                while (in_s[g.other_end(x)]) x = g.rotation_next(EmbeddedGraph::twin(x));
                h = x;
            } while (h != h0);
        }
        if (sr.size() != boundary.size())
            throw InternalError("contraction contour walk missed boundary half-edges");
    }

    for (VertexId v : s)
        if (v != rep) new_vid[v] = super;
    std::vector<VertexId> sorted_s(s.begin(), s.end());
    std::sort(sorted_s.begin(), sorted_s.end());
    sorted_s.erase(std::unique(sorted_s.begin(), sorted_s.end()), sorted_s.end());
    map.contracted[super] = std::move(sorted_s);

    EmbeddedGraph out = EmbeddedGraph::build(static_cast<int>(map.vertex_to_parent.size()),
                                             std::move(ends), std::move(w), std::move(rot));
    return {std::move(out), std::move(map)};
}

}  // namespace planarmatch
