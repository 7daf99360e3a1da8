#include "planarmatch/generators.hpp"

#include <algorithm>
#include <random>

namespace planarmatch {

namespace {

struct Builder {
    int n = 0;
    std::vector<std::array<VertexId, 2>> ends;
    std::vector<std::vector<HalfEdge>> rot;

    VertexId add_vertex() {
        rot.emplace_back();
        return n++;
    }
    // Appends edge u-v; the half-edges are pushed to the back of both
    // rotations (caller is responsible for the final cyclic order).
    EdgeId add_edge(VertexId u, VertexId v) {
        EdgeId e = static_cast<int>(ends.size());
        ends.push_back({u, v});
        rot[u].push_back(2 * e);
        rot[v].push_back(2 * e + 1);
        return e;
    }
    EmbeddedGraph build(std::int64_t w = 0) const {
        return EmbeddedGraph::build(n, ends, Weights(ends.size(), w), rot);
    }
};

}  // namespace

EmbeddedGraph make_grid(int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw InvalidParams("grid: dimensions must be positive");
    const int n = rows * cols;
    auto vid = [cols](int i, int j) { return i * cols + j; };
    std::vector<std::array<VertexId, 2>> ends;
    // Horizontal edges first, then vertical.
    auto hedge = [&](int i, int j) { return i * (cols - 1) + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j) ends.push_back({vid(i, j), vid(i, j + 1)});
    const int voff = static_cast<int>(ends.size());
    auto vedge = [&](int i, int j) { return voff + i * cols + j; };
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j < cols; ++j) ends.push_back({vid(i, j), vid(i + 1, j)});

    auto side = [&](EdgeId e, VertexId v) { return ends[e][0] == v ? 0 : 1; };
    std::vector<std::vector<HalfEdge>> rot(n);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            VertexId v = vid(i, j);
            // Cyclic order: up, right, down, left.
            if (i > 0) rot[v].push_back(2 * vedge(i - 1, j) + side(vedge(i - 1, j), v));
            if (j + 1 < cols) rot[v].push_back(2 * hedge(i, j) + side(hedge(i, j), v));
            if (i + 1 < rows) rot[v].push_back(2 * vedge(i, j) + side(vedge(i, j), v));
            if (j > 0) rot[v].push_back(2 * hedge(i, j - 1) + side(hedge(i, j - 1), v));
        }
    }
    return EmbeddedGraph::build(n, std::move(ends), Weights(ends.size(), 0), std::move(rot));
}

EmbeddedGraph make_wheel(int rim) {
    if (rim < 3) throw InvalidParams("wheel: rim must have at least 3 vertices");
    Builder b;
    VertexId hub = b.add_vertex();
    for (int i = 0; i < rim; ++i) b.add_vertex();
    std::vector<EdgeId> spoke(rim), ring(rim);
    for (int i = 0; i < rim; ++i) spoke[i] = b.add_edge(hub, 1 + i);
    for (int i = 0; i < rim; ++i) ring[i] = b.add_edge(1 + i, 1 + (i + 1) % rim);
    auto half_at = [&](EdgeId e, VertexId v) { return 2 * e + (b.ends[e][0] == v ? 0 : 1); };
    b.rot[hub].clear();
    for (int i = 0; i < rim; ++i) b.rot[hub].push_back(half_at(spoke[i], hub));
    for (int i = 0; i < rim; ++i) {
        VertexId v = 1 + i;
        b.rot[v] = {half_at(spoke[i], v), half_at(ring[(i + rim - 1) % rim], v),
                    half_at(ring[i], v)};
    }
    return b.build();
}

EmbeddedGraph make_prism(int n) {
    if (n < 3) throw InvalidParams("prism: cycles must have at least 3 vertices");
    Builder b;
    for (int i = 0; i < 2 * n; ++i) b.add_vertex();  // outer 0..n-1, inner n..2n-1
    std::vector<EdgeId> outer(n), inner(n), rung(n);
    for (int i = 0; i < n; ++i) outer[i] = b.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) inner[i] = b.add_edge(n + i, n + (i + 1) % n);
    for (int i = 0; i < n; ++i) rung[i] = b.add_edge(i, n + i);
    auto half_at = [&](EdgeId e, VertexId v) { return 2 * e + (b.ends[e][0] == v ? 0 : 1); };
    for (int i = 0; i < n; ++i) {
        b.rot[i] = {half_at(rung[i], i), half_at(outer[(i + n - 1) % n], i),
                    half_at(outer[i], i)};
        b.rot[n + i] = {half_at(rung[i], n + i), half_at(inner[i], n + i),
                        half_at(inner[(i + n - 1) % n], n + i)};
    }
    return b.build();
}

EmbeddedGraph make_theta(int len1, int len2, int len3) {
    int lens[3] = {len1, len2, len3};
    for (int l : lens)
        if (l < 1) throw InvalidParams("theta: path lengths must be at least 1");
    Builder b;
    VertexId u = b.add_vertex();
    VertexId v = b.add_vertex();
    std::vector<EdgeId> first(3), last(3);
    for (int p = 0; p < 3; ++p) {
        VertexId prev = u;
        for (int k = 1; k < lens[p]; ++k) {
            VertexId w = b.add_vertex();
            EdgeId e = b.add_edge(prev, w);
            if (k == 1) first[p] = e;
            prev = w;
        }
        EdgeId e = b.add_edge(prev, v);
        if (lens[p] == 1) first[p] = e;
        last[p] = e;
    }
    auto half_at = [&](EdgeId e, VertexId x) { return 2 * e + (b.ends[e][0] == x ? 0 : 1); };
    b.rot[u] = {half_at(first[0], u), half_at(first[1], u), half_at(first[2], u)};
    b.rot[v] = {half_at(last[2], v), half_at(last[1], v), half_at(last[0], v)};
    return b.build();
}

EmbeddedGraph make_random_planar(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidParams("random_planar: n must be positive");
    std::mt19937_64 rng(seed);
    Builder b;
    if (n == 1) {
        b.add_vertex();
        return b.build();
    }
    if (n == 2) {
        b.add_vertex();
        b.add_vertex();
        b.add_edge(0, 1);
        return b.build();
    }
    for (int i = 0; i < 3; ++i) b.add_vertex();
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 0);
    // Rotation of a triangle: each vertex sees its two edges; fine as pushed.
    EmbeddedGraph g = b.build();

    // Inserts edge x-y inside face f of the current graph, at the corners
    // identified by walk positions ix, iy.  Corner at walk position i means:
    // the new half-edge at vertex_of(face[i]) goes right before face[i] in
    // that rotation.
    auto insert_edge_in_face = [](const EmbeddedGraph& cur, const std::vector<HalfEdge>& face,
                                  int ix, int iy, VertexId extra_vertex) {
        int n0 = cur.num_vertices();
        std::vector<std::array<VertexId, 2>> ends;
        std::vector<std::vector<HalfEdge>> rot;
        ends.reserve(cur.num_edges() + 2);
        for (EdgeId e = 0; e < cur.num_edges(); ++e) ends.push_back(cur.ends(e));
        rot.reserve(n0 + 1);
        for (VertexId v = 0; v < n0; ++v) rot.push_back(cur.rotation(v));
        VertexId x = cur.vertex_of(face[ix]);
        VertexId y = extra_vertex >= 0 ? extra_vertex : cur.vertex_of(face[iy]);
        if (extra_vertex >= 0) rot.emplace_back();
        EdgeId e = static_cast<int>(ends.size());
        ends.push_back({x, y});
        auto insert_before = [&](VertexId v, HalfEdge anchor, HalfEdge nh) {
            auto& r = rot[v];
            auto it = std::find(r.begin(), r.end(), anchor);
            r.insert(it, nh);
        };
        insert_before(x, face[ix], 2 * e);
        if (extra_vertex >= 0)
            rot[y].push_back(2 * e + 1);
        else
            insert_before(y, face[iy], 2 * e + 1);
        int n1 = n0 + (extra_vertex >= 0 ? 1 : 0);
        return EmbeddedGraph::build(n1, std::move(ends), Weights(ends.size(), 0),
                                    std::move(rot));
    };

    while (g.num_vertices() < n) {
        FaceSet fs = trace_faces(g);
        int f = static_cast<int>(rng() % fs.num_faces());
        const auto& face = fs.faces[f];
        int len = static_cast<int>(face.size());
        // Attach a fresh vertex w inside f to two distinct boundary corners.
        int ix = static_cast<int>(rng() % len);
        VertexId x = g.vertex_of(face[ix]);
        int iy = -1;
        for (int k = 1; k < len; ++k) {
            int cand = (ix + k) % len;
            if (g.vertex_of(face[cand]) != x) {
                iy = cand;
                break;
            }
        }
        if (iy < 0) continue;  // degenerate face, try another
        VertexId y = g.vertex_of(face[iy]);
        // First edge w-x (w gets created), then edge w-y inside the same face.
        EmbeddedGraph g1 = insert_edge_in_face(g, face, ix, -1, g.num_vertices());
        VertexId w = g1.num_vertices() - 1;
        FaceSet fs1 = trace_faces(g1);
        int target = -1, pw = -1, py = -1;
        for (int ff = 0; ff < fs1.num_faces() && target < 0; ++ff) {
            const auto& fc = fs1.faces[ff];
            int a = -1, c = -1;
            for (int i = 0; i < static_cast<int>(fc.size()); ++i) {
                if (g1.vertex_of(fc[i]) == w) a = i;
                if (g1.vertex_of(fc[i]) == y) c = i;
            }
            if (a >= 0 && c >= 0) {
                target = ff;
                pw = a;
                py = c;
            }
        }
        if (target < 0) throw InternalError("random_planar: lost the insertion face");
        g = insert_edge_in_face(g1, fs1.faces[target], pw, py, -1);
    }

    // Densify with chords: aim between n+n/4 and roughly 2n edges.
    int target_m = static_cast<int>(g.num_vertices() + 1 + rng() % (g.num_vertices() + 1));
    int attempts = 8 * target_m;
    while (g.num_edges() < target_m && attempts-- > 0) {
        FaceSet fs = trace_faces(g);
        int f = static_cast<int>(rng() % fs.num_faces());
        const auto& face = fs.faces[f];
        int len = static_cast<int>(face.size());
        if (len < 4) continue;
        int ix = static_cast<int>(rng() % len);
        int iy = static_cast<int>(rng() % len);
        VertexId x = g.vertex_of(face[ix]);
        VertexId y = g.vertex_of(face[iy]);
        if (x == y) continue;
        bool adjacent = false;
        for (EdgeId e : g.incident_edges(x))
            if (g.opposite(e, x) == y) adjacent = true;
        if (adjacent) continue;
        g = insert_edge_in_face(g, face, ix, iy, -1);
    }
    return g;
}

Weights random_weights(const EmbeddedGraph& g, std::int64_t wmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Weights w(g.num_edges());
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(wmax + 1));
    return w;
}

}  // namespace planarmatch
