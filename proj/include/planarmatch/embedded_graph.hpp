#ifndef PLANARMATCH_EMBEDDED_GRAPH_HPP
#define PLANARMATCH_EMBEDDED_GRAPH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "planarmatch/errors.hpp"

namespace planarmatch {

using VertexId = int;
using EdgeId = int;
// Half-edge 2*e lives at ends(e)[0], half-edge 2*e+1 at ends(e)[1].
using HalfEdge = int;

using Weights = std::vector<std::int64_t>;

/// Planar multigraph given by a rotation system.  Parallel edges and
/// self-loops are allowed; a self-loop contributes both of its half-edges
/// to the rotation of its vertex.  Immutable after construction: all
/// surgery returns new graphs.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    /// Builds and validates.  `rotation[v]` is the cyclic order of half-edges
    /// around v; every half-edge must appear exactly once, at its endpoint.
    /// Throws EmbeddingInvalid on malformed input or failed genus-0 check.
    static EmbeddedGraph build(int num_vertices,
                               std::vector<std::array<VertexId, 2>> edge_ends,
                               Weights weights,
                               std::vector<std::vector<HalfEdge>> rotation);

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const { return static_cast<int>(ends_.size()); }

    const std::array<VertexId, 2>& ends(EdgeId e) const { return ends_[e]; }
    std::int64_t weight(EdgeId e) const { return weight_[e]; }
    const Weights& weights() const { return weight_; }
    const std::vector<HalfEdge>& rotation(VertexId v) const { return rotation_[v]; }

    bool is_self_loop(EdgeId e) const { return ends_[e][0] == ends_[e][1]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

    static EdgeId edge_of(HalfEdge h) { return h >> 1; }
    static int side_of(HalfEdge h) { return h & 1; }
    static HalfEdge half(EdgeId e, int side) { return 2 * e + side; }
    static HalfEdge twin(HalfEdge h) { return h ^ 1; }

    /// Vertex the half-edge is attached to (where it appears in a rotation).
    VertexId vertex_of(HalfEdge h) const { return ends_[h >> 1][h & 1]; }
    /// The other endpoint of the underlying edge.
    VertexId other_end(HalfEdge h) const { return ends_[h >> 1][1 - (h & 1)]; }
    VertexId opposite(EdgeId e, VertexId v) const {
        return ends_[e][0] == v ? ends_[e][1] : ends_[e][0];
    }

    /// Position of h within rotation(vertex_of(h)).
    int rotation_pos(HalfEdge h) const { return pos_[h]; }

    /// Successor of h in the cyclic rotation at its vertex.
    HalfEdge rotation_next(HalfEdge h) const;

    /// Next half-edge on the face walk: advance across the edge, then turn.
    HalfEdge face_next(HalfEdge h) const { return rotation_next(twin(h)); }

    /// Connected components over vertices; component ids are ordered by the
    /// smallest vertex id they contain.
    std::vector<int> component_ids() const;
    int num_components() const;

    std::vector<EdgeId> incident_edges(VertexId v) const;

    EmbeddedGraph with_weights(Weights w) const;

private:
    std::vector<std::array<VertexId, 2>> ends_;
    Weights weight_;
    std::vector<std::vector<HalfEdge>> rotation_;
    std::vector<int> pos_;  // half-edge -> index in its rotation

    void validate() const;
};

/// Faces of the embedding.  Face ids are canonical: faces sorted by their
/// smallest half-edge.  Face 0 (the face through half-edge 0, when edges
/// exist) doubles as the designated outer face everywhere in the library.
struct FaceSet {
    // Each face is the cyclic sequence of half-edges of its boundary walk.
    std::vector<std::vector<HalfEdge>> faces;
    std::vector<int> face_of;  // half-edge -> face id

    int num_faces() const { return static_cast<int>(faces.size()); }
    int face_len(int f) const { return static_cast<int>(faces[f].size()); }
    /// Faces on the two sides of edge e.
    std::array<int, 2> sides(EdgeId e) const { return {face_of[2 * e], face_of[2 * e + 1]}; }
    /// Vertices on the boundary walk of face f, in walk order.
    std::vector<VertexId> boundary_vertices(const EmbeddedGraph& g, int f) const;
    /// True if no vertex repeats on the boundary walk of f.
    bool is_simple(const EmbeddedGraph& g, int f) const;
};

FaceSet trace_faces(const EmbeddedGraph& g);

/// Multigraph dual: one vertex per face, dual edge i = primal edge i.
struct DualGraph {
    int num_faces = 0;
    std::vector<std::array<int, 2>> ends;  // dual edge e -> {face, face}
};

DualGraph dual_graph(const EmbeddedGraph& g, const FaceSet& fs);

/// Tracks how vertices/edges of a derived graph map back to the graph the
/// surgery was applied to.  Composable, so matchings found deep in a
/// recursion can be lifted all the way out.
struct SurgeryMap {
    std::vector<VertexId> vertex_to_parent;  // derived vertex -> parent vertex
    std::vector<EdgeId> edge_to_parent;      // derived edge -> parent edge
    // Super-vertices introduced by contraction: derived vertex -> parent set.
    std::map<VertexId, std::vector<VertexId>> contracted;

    static SurgeryMap identity(const EmbeddedGraph& g);

    /// `inner` was derived from the graph this map was derived from:
    /// returns the map from inner's graph straight to this map's parent.
    SurgeryMap composed_with(const SurgeryMap& inner) const;

    std::vector<EdgeId> lift_edges(const std::vector<EdgeId>& derived_edges) const;
};

/// Deletes the given edges (vertices stay).  Ids are compacted, preserving
/// relative order.
std::pair<EmbeddedGraph, SurgeryMap> delete_edges(const EmbeddedGraph& g,
                                                  const std::vector<EdgeId>& edges);

/// Deletes vertices and all incident edges.
std::pair<EmbeddedGraph, SurgeryMap> delete_vertices(const EmbeddedGraph& g,
                                                     const std::vector<VertexId>& verts);

/// Contracts a connected vertex set to one super-vertex.  The super-vertex
/// rotation is the boundary walk order of delta(S); edges inside S are
/// dropped (including any self-loops created).  Throws
/// ContractionDisconnected when S is not connected in g.
std::pair<EmbeddedGraph, SurgeryMap> contract_vertex_set(const EmbeddedGraph& g,
                                                         const std::vector<VertexId>& s);

}  // namespace planarmatch

#endif
