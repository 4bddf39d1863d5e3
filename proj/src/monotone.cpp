#include "scg/monotone.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "scg/errors.hpp"

namespace scg {

const char* to_string(Direction d) {
    return d == Direction::Up ? "UP" : "DOWN";
}

Direction direction_from_string(std::string_view s) {
    if (s == "UP") return Direction::Up;
    if (s == "DOWN") return Direction::Down;
    throw ParseError("unknown direction '" + std::string(s) + "'");
}

namespace {

// Arc i->j exists in direction d iff {i,j} is an edge and the weights do
// not move against d.
bool arc_admits(const WeightedGraph& g, std::size_t from, std::size_t to, Direction d) {
    return d == Direction::Up ? g.weight_at(from) <= g.weight_at(to)
                              : g.weight_at(from) >= g.weight_at(to);
}

} // namespace

namespace detail {

std::vector<char> reach_mask(const WeightedGraph& g, std::size_t source, Direction d) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::uint32_t> stack;
    seen[source] = 1;
    stack.push_back(static_cast<std::uint32_t>(source));
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (const auto w : g.adjacent(v)) {
            if (!seen[w] && arc_admits(g, v, w, d)) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

DirectionSet direction_set_of(const WeightedGraph& g, const std::vector<std::size_t>& seq) {
    DirectionSet dirs = DirectionSet::both();
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const auto& prev = g.weight_at(seq[i - 1]);
        const auto& cur = g.weight_at(seq[i]);
        if (prev < cur) dirs.down = false;
        if (prev > cur) dirs.up = false;
    }
    return dirs;
}

} // namespace detail

OrientedDigraph::OrientedDigraph(const WeightedGraph& g, Direction d) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        auto& out = out_[g.name(i)];
        for (const auto j : g.adjacent(i)) {
            if (arc_admits(g, i, j, d)) out.push_back(g.name(j));
        }
    }
}

const std::vector<VertexId>& OrientedDigraph::successors(const VertexId& v) const {
    const auto it = out_.find(v);
    if (it == out_.end()) throw DomainError("unknown vertex '" + v + "'");
    return it->second;
}

bool OrientedDigraph::has_arc(const VertexId& from, const VertexId& to) const {
    const auto& succ = successors(from);
    return std::binary_search(succ.begin(), succ.end(), to);
}

OrientedDigraph oriented_digraph(const WeightedGraph& g, Direction d) {
    return OrientedDigraph(g, d);
}

std::set<VertexId> reach_set(const WeightedGraph& g, const VertexId& source, Direction d) {
    const auto mask = detail::reach_mask(g, g.index_of(source), d);
    std::set<VertexId> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) out.insert(g.name(i));
    }
    return out;
}

std::optional<MonotonePath> monotone_path(const WeightedGraph& g, const VertexId& from,
                                          const VertexId& to, Direction d) {
    const std::size_t src = g.index_of(from);
    const std::size_t dst = g.index_of(to);
    const std::size_t n = g.vertex_count();

    // BFS from the destination against d gives the distance-to-destination
    // along d for every vertex (reversing the oriented digraph flips the
    // direction).
    constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::vector<std::uint32_t> queue;
    dist[dst] = 0;
    queue.push_back(static_cast<std::uint32_t>(dst));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto v = queue[head];
        for (const auto w : g.adjacent(v)) {
            if (dist[w] == kUnreached && arc_admits(g, v, w, opposite(d))) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if (dist[src] == kUnreached) return std::nullopt;

    // Walk greedily toward the destination; neighbor indices are sorted,
    // so taking the first admissible step yields the lexicographically
    // smallest shortest sequence.
    std::vector<std::size_t> seq{src};
    std::size_t cur = src;
    while (cur != dst) {
        for (const auto w : g.adjacent(cur)) {
            if (dist[w] == dist[cur] - 1 && arc_admits(g, cur, w, d)) {
                seq.push_back(w);
                cur = w;
                break;
            }
        }
    }

    MonotonePath path;
    path.directions = detail::direction_set_of(g, seq);
    for (const auto i : seq) path.vertices.push_back(g.name(i));
    return path;
}

ClassifyResult classify_path(const WeightedGraph& g, const std::vector<VertexId>& sequence) {
    using Kind = PathRejection::Kind;
    if (sequence.empty()) return PathRejection{Kind::EmptySequence, 0};

    std::vector<std::size_t> seq;
    std::set<std::size_t> visited;
    DirectionSet dirs = DirectionSet::both();
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (!g.contains(sequence[i])) return PathRejection{Kind::UnknownVertex, i};
        const std::size_t v = g.index_of(sequence[i]);
        if (!visited.insert(v).second) return PathRejection{Kind::RepeatedVertex, i};
        if (i > 0) {
            const auto& nbrs = g.adjacent(seq[i - 1]);
            if (!std::binary_search(nbrs.begin(), nbrs.end(), static_cast<std::uint32_t>(v))) {
                return PathRejection{Kind::NotAdjacent, i};
            }
            const auto& prev = g.weight_at(seq[i - 1]);
            const auto& cur = g.weight_at(v);
            if (prev < cur) dirs.down = false;
            if (prev > cur) dirs.up = false;
            if (dirs.empty()) return PathRejection{Kind::NotMonotone, i};
        }
        seq.push_back(v);
    }
    return MonotonePath{sequence, dirs};
}

} // namespace scg
