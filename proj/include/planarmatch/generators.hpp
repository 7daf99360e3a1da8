#ifndef PLANARMATCH_GENERATORS_HPP
#define PLANARMATCH_GENERATORS_HPP

#include <cstdint>

#include "planarmatch/embedded_graph.hpp"

namespace planarmatch {

/// k x l grid graph, vertices row-major, unit-square faces.
EmbeddedGraph make_grid(int rows, int cols);

/// Hub plus a cycle of `rim` vertices, every rim vertex joined to the hub.
EmbeddedGraph make_wheel(int rim);

/// Two concentric n-cycles joined by rungs.
EmbeddedGraph make_prism(int n);

/// Two hub vertices joined by three internally disjoint paths with the given
/// edge counts (each >= 1; at most one may equal 1).
EmbeddedGraph make_theta(int len1, int len2, int len3);

/// Random connected planar multiless graph grown by incremental planar
/// insertion: new vertices are attached inside a face, extra edges are drawn
/// inside faces.  Deterministic for a fixed seed.
EmbeddedGraph make_random_planar(int n, std::uint64_t seed);

/// Uniform random weights in [0, wmax], deterministic for a fixed seed.
Weights random_weights(const EmbeddedGraph& g, std::int64_t wmax, std::uint64_t seed);

}  // namespace planarmatch

#endif
