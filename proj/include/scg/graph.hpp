#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scg/rational.hpp"

namespace scg {

using VertexId = std::string;
using Weight = Rational;

// Simple undirected graph with exact non-negative vertex weights.
// Immutable after construction; connectivity is a validation finding,
// not a construction invariant, so set-operation intermediates stay
// representable. Vertices are kept sorted, which makes every iteration
// order (and thus every output) deterministic.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Throws DomainError on duplicate ids, self-loops, duplicate edges,
    // unknown endpoints or negative weights.
    WeightedGraph(std::vector<std::pair<VertexId, Weight>> vertices,
                  std::vector<std::pair<VertexId, VertexId>> edges);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool contains(const VertexId& v) const noexcept;
    const Weight& weight(const VertexId& v) const;
    std::size_t degree(const VertexId& v) const;
    std::vector<VertexId> neighbors(const VertexId& v) const;
    bool has_edge(const VertexId& x, const VertexId& y) const;

    // Sorted vertex ids and normalized (a < b), sorted edge pairs.
    const std::vector<VertexId>& vertex_ids() const noexcept { return names_; }
    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

    // Index-based view used by the graph algorithms; indices follow the
    // lexicographic order of vertex_ids().
    std::size_t index_of(const VertexId& v) const;
    const VertexId& name(std::size_t i) const { return names_[i]; }
    const Weight& weight_at(std::size_t i) const { return weights_[i]; }
    const std::vector<std::uint32_t>& adjacent(std::size_t i) const { return adj_[i]; }

    bool operator==(const WeightedGraph& o) const {
        return names_ == o.names_ && weights_ == o.weights_ && edges_ == o.edges_;
    }

private:
    std::vector<VertexId> names_;                           // sorted
    std::vector<Weight> weights_;                           // parallel to names_
    std::vector<std::vector<std::uint32_t>> adj_;           // sorted neighbor indices
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_; // normalized, sorted
};

struct ValidationReport {
    bool connected = false;
    std::size_t component_count = 0;
    std::set<VertexId> leaves;
    std::map<VertexId, std::size_t> degrees;
};

// Degree-1 vertices. A lone vertex has degree 0 and therefore no leaves.
std::set<VertexId> leaves(const WeightedGraph& g);

ValidationReport validate(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

bool is_tree(const WeightedGraph& g);

// sub is a subgraph of super: vertex ids and edges are contained and the
// shared vertices carry equal weights.
bool is_subgraph(const WeightedGraph& sub, const WeightedGraph& super);

} // namespace scg
