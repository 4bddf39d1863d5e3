#include "scg/star_convexity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "scg/errors.hpp"

namespace scg {

CoreReport core(const WeightedGraph& g) {
    const auto leaf_set = leaves(g);
    if (leaf_set.empty()) throw DomainError("graph has no leaf vertices");
    if (!is_connected(g)) throw DomainError("graph is disconnected");

    const std::size_t n = g.vertex_count();

    // One reverse sweep per leaf: u ∈ reach(leaf, Down) iff an Up path runs
    // u -> leaf, and symmetrically for Down; a vertex stays a core
    // candidate while every processed leaf is covered one way or the other.
    std::vector<std::size_t> leaf_idx;
    for (const auto& leaf : leaf_set) leaf_idx.push_back(g.index_of(leaf));

    std::vector<std::vector<char>> up_covered; // per leaf: Up path u -> leaf exists
    std::vector<std::vector<char>> down_covered;
    std::vector<char> candidate(n, 1);
    for (const auto li : leaf_idx) {
        up_covered.push_back(detail::reach_mask(g, li, Direction::Down));
        down_covered.push_back(detail::reach_mask(g, li, Direction::Up));
        const auto& up = up_covered.back();
        const auto& down = down_covered.back();
        for (std::size_t v = 0; v < n; ++v) {
            if (candidate[v] && !up[v] && !down[v]) candidate[v] = 0;
        }
    }

    CoreReport report;
    for (std::size_t v = 0; v < n; ++v) {
        if (!candidate[v]) continue;
        report.core.insert(g.name(v));
        auto& per_leaf = report.witnesses[g.name(v)];
        for (std::size_t k = 0; k < leaf_idx.size(); ++k) {
            per_leaf[g.name(leaf_idx[k])] =
                up_covered[k][v] ? Direction::Up : Direction::Down;
        }
    }
    report.star_convex = !report.core.empty();
    return report;
}

bool is_star_convex(const WeightedGraph& g) {
    return core(g).star_convex;
}

namespace {

// Unique tree path from root to target, as vertex indices.
std::vector<std::size_t> tree_path(const WeightedGraph& tree, std::size_t root,
                                   std::size_t target) {
    const std::size_t n = tree.vertex_count();
    std::vector<std::uint32_t> parent(n, std::numeric_limits<std::uint32_t>::max());
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(root)};
    seen[root] = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (const auto w : tree.adjacent(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::size_t> path;
    for (std::uint32_t v = static_cast<std::uint32_t>(target);;
         v = parent[v]) {
        path.push_back(v);
        if (v == root) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::variant<Direction, AlignmentViolation>
check_leaf_core_alignment(const WeightedGraph& tree, const VertexId& u) {
    if (!is_tree(tree)) throw DomainError("graph is not a tree");
    const auto leaf_set = leaves(tree);
    const auto report = core(tree);
    if (!leaf_set.contains(u) || !report.core.contains(u)) {
        throw DomainError("vertex '" + u + "' is not in core ∩ leaves");
    }

    const std::size_t root = tree.index_of(u);
    DirectionSet admissible = DirectionSet::both();
    for (const auto& leaf : leaf_set) {
        if (leaf == u) continue;
        const auto path = tree_path(tree, root, tree.index_of(leaf));
        const auto dirs = detail::direction_set_of(tree, path);
        admissible.up = admissible.up && dirs.up;
        admissible.down = admissible.down && dirs.down;
        if (admissible.empty()) return AlignmentViolation{leaf};
    }
    return admissible.up ? Direction::Up : Direction::Down;
}

ExtremalReport extremal_locus_check(const WeightedGraph& tree) {
    if (!is_tree(tree)) throw DomainError("graph is not a tree");
    const auto report = core(tree);
    if (!report.star_convex) throw DomainError("tree is not star-convex");

    std::set<VertexId> locus = leaves(tree);
    locus.insert(report.core.begin(), report.core.end());

    ExtremalReport out;
    for (std::size_t i = 0; i < tree.vertex_count(); ++i) {
        const auto& w = tree.weight_at(i);
        if (i == 0 || w > out.max_value) {
            out.max_value = w;
            out.max_vertex = tree.name(i);
        }
        if (i == 0 || w < out.min_value) {
            out.min_value = w;
            out.min_vertex = tree.name(i);
        }
    }
    bool first = true;
    for (const auto& v : locus) {
        const auto& w = tree.weight(v);
        if (first || w > out.locus_max) {
            out.locus_max = w;
            out.locus_max_vertex = v;
        }
        if (first || w < out.locus_min) {
            out.locus_min = w;
            out.locus_min_vertex = v;
        }
        first = false;
    }
    out.max_attained_on_locus = out.locus_max == out.max_value;
    out.min_attained_on_locus = out.locus_min == out.min_value;
    return out;
}

nlohmann::json core_report_to_json(const CoreReport& report) {
    nlohmann::json witnesses = nlohmann::json::object();
    for (const auto& [vertex, per_leaf] : report.witnesses) {
        nlohmann::json entry = nlohmann::json::object();
        for (const auto& [leaf, dir] : per_leaf) entry[leaf] = to_string(dir);
        witnesses[vertex] = std::move(entry);
    }
    return nlohmann::json{
        {"star_convex", report.star_convex},
        {"core", std::vector<VertexId>(report.core.begin(), report.core.end())},
        {"witnesses", std::move(witnesses)},
    };
}

} // namespace scg
