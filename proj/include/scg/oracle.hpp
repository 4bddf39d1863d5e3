#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "scg/graph.hpp"
#include "scg/sequence_embedding.hpp"

namespace scg {

// Exhaustive enumeration explodes factorially; everything above this bound
// is refused rather than silently slow.
inline constexpr std::size_t kDefaultOracleBound = 10;

// All simple paths between the endpoints in lexicographic order, the
// single-vertex path included when from == to. Ground truth only — never
// called by the fast algorithms.
std::vector<std::vector<VertexId>> enumerate_simple_paths(
    const WeightedGraph& g, const VertexId& from, const VertexId& to,
    std::size_t max_vertices = kDefaultOracleBound);

// Core by the definition: vertices with a weight-monotone simple path to
// every leaf, found by path enumeration. Shares no algorithm code with the
// star-convexity module, which is what makes the equivalence suites
// meaningful. Requires a graph within the bound and a non-empty leaf set.
std::set<VertexId> brute_core(const WeightedGraph& g,
                              std::size_t max_vertices = kDefaultOracleBound);

struct GeneratorParams {
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 8;
    std::vector<Rational> weight_grid;
    Rational edge_density; // in [0, 1]; 0 = spanning tree, 1 = complete
    std::uint64_t seed = 0;
};

// Connected simple graph: a random recursive spanning tree over vertices
// "v01".."vNN" plus density-controlled extra edges, weights drawn from the
// grid. Pure function of params.
WeightedGraph random_graph(const GeneratorParams& p);

// A class of n convex sequences of length 2ℓ+1 that passes validate_class
// by construction: second differences are sampled non-negative outward
// from a shared middle value. Pure function of (n, ℓ, seed).
ConvexSequenceClass random_convex_class(std::size_t n, std::size_t ell,
                                        std::uint64_t seed);

} // namespace scg
