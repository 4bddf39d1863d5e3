#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

// Orientation of the weight chain along a path: Up = non-decreasing,
// Down = non-increasing. Both hold exactly on constant-weight paths.
enum class Direction { Up, Down };

constexpr Direction opposite(Direction d) {
    return d == Direction::Up ? Direction::Down : Direction::Up;
}

const char* to_string(Direction d);
Direction direction_from_string(std::string_view s);

struct DirectionSet {
    bool up = false;
    bool down = false;

    bool contains(Direction d) const { return d == Direction::Up ? up : down; }
    bool empty() const { return !up && !down; }
    static DirectionSet both() { return {true, true}; }

    bool operator==(const DirectionSet&) const = default;
};

// A simple path whose weights are monotone in every direction of
// `directions` (never empty). The single-vertex path carries both.
struct MonotonePath {
    std::vector<VertexId> vertices;
    DirectionSet directions;
};

// Each edge {a,b} turned into the arc a->b when the weights admit
// direction d across it; equal weights give arcs both ways.
class OrientedDigraph {
public:
    OrientedDigraph(const WeightedGraph& g, Direction d);

    const std::vector<VertexId>& successors(const VertexId& v) const;
    bool has_arc(const VertexId& from, const VertexId& to) const;
    const std::map<VertexId, std::vector<VertexId>>& adjacency() const { return out_; }

private:
    std::map<VertexId, std::vector<VertexId>> out_;
};

OrientedDigraph oriented_digraph(const WeightedGraph& g, Direction d);

// All vertices reachable from source along a weight-monotone path in
// direction d; always contains the source. Throws DomainError on an
// unknown source id.
std::set<VertexId> reach_set(const WeightedGraph& g, const VertexId& source, Direction d);

// Shortest (fewest edges) monotone path in direction d, ties broken by the
// lexicographically smallest vertex sequence; nullopt when none exists.
std::optional<MonotonePath> monotone_path(const WeightedGraph& g, const VertexId& from,
                                          const VertexId& to, Direction d);

struct PathRejection {
    enum class Kind {
        EmptySequence,
        UnknownVertex,
        RepeatedVertex,
        NotAdjacent,
        NotMonotone,
    };
    Kind kind;
    std::size_t index; // first violating position in the sequence
};

using ClassifyResult = std::variant<MonotonePath, PathRejection>;

// Verifies adjacency and simplicity and computes the direction subset;
// rejections carry the first violating index.
ClassifyResult classify_path(const WeightedGraph& g, const std::vector<VertexId>& sequence);

namespace detail {

// Index-based reachability mask, shared by the fast algorithms.
std::vector<char> reach_mask(const WeightedGraph& g, std::size_t source, Direction d);

// Direction subset admitted by the weights along an index sequence.
DirectionSet direction_set_of(const WeightedGraph& g, const std::vector<std::size_t>& seq);

} // namespace detail

} // namespace scg
