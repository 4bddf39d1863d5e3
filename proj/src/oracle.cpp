#include "scg/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "scg/errors.hpp"
#include "scg/random.hpp"

namespace scg {

namespace {

// The oracle works from its own plain adjacency map so that none of the
// fast modules' machinery is in the loop.
std::map<VertexId, std::vector<VertexId>> plain_adjacency(const WeightedGraph& g) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& id : g.vertex_ids()) adj[id];
    for (const auto& [a, b] : g.edge_list()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [_, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

void check_bound(const WeightedGraph& g, std::size_t max_vertices) {
    if (g.vertex_count() > max_vertices) {
        throw DomainError("graph with " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the exhaustive bound " +
                          std::to_string(max_vertices));
    }
}

void collect_paths(const std::map<VertexId, std::vector<VertexId>>& adj,
                   const VertexId& to, std::vector<VertexId>& prefix,
                   std::set<VertexId>& used,
                   std::vector<std::vector<VertexId>>& out) {
    const auto& tip = prefix.back();
    if (tip == to) {
        out.push_back(prefix);
        return;
    }
    for (const auto& next : adj.at(tip)) {
        if (used.contains(next)) continue;
        used.insert(next);
        prefix.push_back(next);
        collect_paths(adj, to, prefix, used, out);
        prefix.pop_back();
        used.erase(next);
    }
}

} // namespace

std::vector<std::vector<VertexId>> enumerate_simple_paths(const WeightedGraph& g,
                                                          const VertexId& from,
                                                          const VertexId& to,
                                                          std::size_t max_vertices) {
    check_bound(g, max_vertices);
    if (!g.contains(from)) throw DomainError("unknown vertex '" + from + "'");
    if (!g.contains(to)) throw DomainError("unknown vertex '" + to + "'");

    const auto adj = plain_adjacency(g);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> prefix{from};
    std::set<VertexId> used{from};
    collect_paths(adj, to, prefix, used, out);
    // Neighbor lists are sorted, so the depth-first order is already
    // lexicographic; shorter prefixes of longer paths cannot both appear
    // (a path stops at `to`), hence no tie handling is needed.
    return out;
}

namespace {

// Does some simple path from u to leaf have non-decreasing or
// non-increasing weights throughout? Depth-first with the direction flags
// carried along; a prefix monotone in neither direction cannot recover.
bool monotone_path_exists(const WeightedGraph& g,
                          const std::map<VertexId, std::vector<VertexId>>& adj,
                          std::set<VertexId>& used, const VertexId& at,
                          const VertexId& leaf, bool nondecreasing,
                          bool nonincreasing) {
    if (at == leaf) return true;
    for (const auto& next : adj.at(at)) {
        if (used.contains(next)) continue;
        const bool still_up = nondecreasing && g.weight(at) <= g.weight(next);
        const bool still_down = nonincreasing && g.weight(next) <= g.weight(at);
        if (!still_up && !still_down) continue;
        used.insert(next);
        const bool found =
            monotone_path_exists(g, adj, used, next, leaf, still_up, still_down);
        used.erase(next);
        if (found) return true;
    }
    return false;
}

} // namespace

std::set<VertexId> brute_core(const WeightedGraph& g, std::size_t max_vertices) {
    check_bound(g, max_vertices);
    const auto adj = plain_adjacency(g);

    std::set<VertexId> leaf_set;
    for (const auto& [id, nbrs] : adj) {
        if (nbrs.size() == 1) leaf_set.insert(id);
    }
    if (leaf_set.empty()) throw DomainError("graph has no leaf vertices");

    std::set<VertexId> out;
    for (const auto& u : g.vertex_ids()) {
        bool covers_all = true;
        for (const auto& leaf : leaf_set) {
            std::set<VertexId> used{u};
            if (!monotone_path_exists(g, adj, used, u, leaf, true, true)) {
                covers_all = false;
                break;
            }
        }
        if (covers_all) out.insert(u);
    }
    return out;
}

WeightedGraph random_graph(const GeneratorParams& p) {
    if (p.weight_grid.empty()) throw DomainError("weight grid is empty");
    if (p.min_vertices == 0 || p.min_vertices > p.max_vertices) {
        throw DomainError("vertex count range is empty");
    }
    if (p.edge_density.is_negative() || Rational::from_integer(1) < p.edge_density) {
        throw DomainError("edge density must lie in [0, 1]");
    }

    std::mt19937_64 rng(p.seed);
    const std::size_t n =
        p.min_vertices +
        uniform_below(rng, static_cast<std::uint64_t>(p.max_vertices - p.min_vertices + 1));

    auto vertex_name = [n](std::size_t i) {
        std::string digits = std::to_string(i + 1);
        const std::size_t width = std::max<std::size_t>(2, std::to_string(n).size());
        return "v" + std::string(width - digits.size(), '0') + digits;
    };

    // Random recursive tree keeps the graph connected at density 0.
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i) {
        const auto parent = uniform_below(rng, static_cast<std::uint64_t>(i));
        edges.insert({static_cast<std::size_t>(parent), i});
    }

    // Exact density coin: accept k < density·2^32, so density 0 adds
    // nothing and density 1 adds every remaining pair.
    constexpr std::uint64_t kResolution = 1ULL << 32;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edges.contains({i, j})) continue;
            const auto draw = uniform_below(rng, kResolution);
            if (Rational::from_fraction(static_cast<long long>(draw),
                                        static_cast<long long>(kResolution)) <
                p.edge_density) {
                edges.insert({i, j});
            }
        }
    }

    std::vector<std::pair<VertexId, Weight>> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        const auto pick = uniform_below(rng, p.weight_grid.size());
        vertices.emplace_back(vertex_name(i), p.weight_grid[pick]);
    }
    std::vector<std::pair<VertexId, VertexId>> edge_ids;
    for (const auto& [i, j] : edges) {
        edge_ids.emplace_back(vertex_name(i), vertex_name(j));
    }
    return WeightedGraph(std::move(vertices), std::move(edge_ids));
}

ConvexSequenceClass random_convex_class(std::size_t n, std::size_t ell,
                                        std::uint64_t seed) {
    if (n == 0 || ell == 0) throw DomainError("class needs n ≥ 1 and ℓ ≥ 1");
    std::mt19937_64 rng(seed);

    const std::vector<Rational> hub_grid = {
        Rational::from_integer(0), Rational::from_fraction(1, 4),
        Rational::from_integer(1), Rational::from_integer(3)};
    const std::vector<Rational> step_grid = {
        Rational::from_integer(0), Rational::from_fraction(1, 2),
        Rational::from_integer(1), Rational::from_integer(2)};

    ConvexSequenceClass c;
    c.hub_value = hub_grid[uniform_below(rng, hub_grid.size())];

    for (std::size_t j = 0; j < n; ++j) {
        // Differences toward each end are cumulative sums of non-negative
        // steps, so they are monotone away from the middle and the middle
        // stays the global minimum: valid by construction.
        std::vector<Rational> seq(2 * ell + 1, c.hub_value);
        Rational left_drop = Rational::from_integer(0);
        Rational right_rise = Rational::from_integer(0);
        for (std::size_t k = 1; k <= ell; ++k) {
            left_drop = left_drop + step_grid[uniform_below(rng, step_grid.size())];
            seq[ell - k] = seq[ell - k + 1] + left_drop;
            right_rise = right_rise + step_grid[uniform_below(rng, step_grid.size())];
            seq[ell + k] = seq[ell + k - 1] + right_rise;
        }
        c.sequences.push_back(std::move(seq));
    }
    return c;
}

} // namespace scg
