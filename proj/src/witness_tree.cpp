#include "scg/witness_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

#include "scg/errors.hpp"
#include "scg/graph_io.hpp"
#include "scg/monotone.hpp"

namespace scg {

namespace {

using Adjacency = std::map<VertexId, std::set<VertexId>>;

// Unique path root -> target inside the working tree.
std::vector<VertexId> working_path(const Adjacency& adj, const VertexId& root,
                                   const VertexId& target) {
    std::map<VertexId, VertexId> parent;
    std::deque<VertexId> queue{root};
    parent[root] = root;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        if (v == target) break;
        for (const auto& w : adj.at(v)) {
            if (!parent.contains(w)) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    std::vector<VertexId> path;
    for (VertexId v = target;; v = parent.at(v)) {
        path.push_back(v);
        if (v == root) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

void audit_root_paths(const WeightedGraph& g, const Adjacency& adj,
                      const VertexId& root, GraftAudit& audit) {
    for (const auto& [vertex, _] : adj) {
        const auto path = working_path(adj, root, vertex);
        ++audit.paths_checked;
        const auto result = classify_path(g, path);
        if (!std::holds_alternative<MonotonePath>(result)) ++audit.monotone_failures;
    }
}

WeightedGraph materialize(const WeightedGraph& g, const Adjacency& adj) {
    std::vector<std::pair<VertexId, Weight>> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [vertex, nbrs] : adj) {
        vertices.emplace_back(vertex, g.weight(vertex));
        for (const auto& other : nbrs) {
            if (vertex < other) edges.emplace_back(vertex, other);
        }
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

// The unique vertex of the trimmed subtree closest to `from` in the
// working tree.
VertexId project_onto(const Adjacency& adj, const WeightedGraph& trimmed,
                      const VertexId& from) {
    std::set<VertexId> seen{from};
    std::deque<VertexId> queue{from};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        if (trimmed.contains(v)) return v;
        for (const auto& w : adj.at(v)) {
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    throw std::logic_error("construction root disconnected from trimmed tree");
}

} // namespace

WitnessTree extract_witness_tree(const WeightedGraph& g,
                                 const std::optional<VertexId>& root,
                                 GraftAudit* audit) {
    const auto leaf_set = leaves(g);
    if (leaf_set.size() < 2) throw DomainError("graph has fewer than two leaves");
    const auto report = core(g);
    if (!report.star_convex) throw DomainError("graph is not star-convex");

    VertexId u;
    if (root.has_value()) {
        if (!report.core.contains(*root)) {
            throw DomainError("root '" + *root + "' is not in the core");
        }
        u = *root;
    } else {
        u = *report.core.begin();
    }

    Adjacency adj;
    adj[u];
    for (const auto& leaf : leaf_set) {
        auto path = monotone_path(g, u, leaf, Direction::Up);
        if (!path.has_value()) path = monotone_path(g, u, leaf, Direction::Down);
        if (!path.has_value()) {
            throw std::logic_error("core vertex has no monotone path to a leaf");
        }
        const auto& seq = path->vertices;

        std::size_t contact = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (adj.contains(seq[i])) contact = i;
        }
        // The strict suffix after the last contact is disjoint from the
        // tree, so grafting can never close a cycle.
        for (std::size_t i = contact + 1; i < seq.size(); ++i) {
            adj[seq[i - 1]].insert(seq[i]);
            adj[seq[i]].insert(seq[i - 1]);
        }
        if (audit != nullptr) {
            ++audit->grafts;
            audit_root_paths(g, adj, u, *audit);
        }
    }

    const WeightedGraph working = materialize(g, adj);
    if (!is_tree(working)) throw std::logic_error("working graph is not a tree");

    WitnessTree out;
    out.tree = steiner_subtree(working, leaf_set);
    out.root = project_onto(adj, out.tree, u);
    out.leaf_map = leaves(out.tree);
    if (out.leaf_map != leaf_set) {
        throw std::logic_error("witness tree leaf set differs from the source");
    }
    return out;
}

WitnessCheck verify_witness(const WeightedGraph& g, const WitnessTree& t) {
    if (!is_subgraph(t.tree, g)) return {false, "subgraph"};
    if (!is_tree(t.tree)) return {false, "tree"};
    CoreReport report;
    try {
        report = core(t.tree);
    } catch (const DomainError&) {
        return {false, "star-convexity"}; // single-vertex tree: no leaves
    }
    if (!report.star_convex) return {false, "star-convexity"};
    if (leaves(t.tree) != leaves(g)) return {false, "leaf-set"};
    if (!report.core.contains(t.root)) return {false, "root-in-core"};
    return {true, ""};
}

WeightedGraph steiner_subtree(const WeightedGraph& t, const std::set<VertexId>& terminals) {
    if (!is_tree(t)) throw DomainError("graph is not a tree");
    if (terminals.size() < 2) throw DomainError("fewer than two terminals");
    for (const auto& x : terminals) {
        if (!t.contains(x)) throw DomainError("unknown terminal '" + x + "'");
    }

    const std::size_t n = t.vertex_count();
    constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> parent(n, kNone);
    const auto root = static_cast<std::uint32_t>(t.index_of(*terminals.begin()));
    std::vector<std::uint32_t> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (const auto w : t.adjacent(v)) {
            if (parent[w] == kNone) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }

    std::set<std::uint32_t> keep{root};
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& x : terminals) {
        auto v = static_cast<std::uint32_t>(t.index_of(x));
        while (!keep.contains(v)) {
            keep.insert(v);
            const auto p = parent[v];
            edges.insert({std::min(v, p), std::max(v, p)});
            v = p;
        }
    }

    std::vector<std::pair<VertexId, Weight>> vertices;
    for (const auto v : keep) vertices.emplace_back(t.name(v), t.weight_at(v));
    std::vector<std::pair<VertexId, VertexId>> edge_ids;
    for (const auto& [a, b] : edges) edge_ids.emplace_back(t.name(a), t.name(b));
    return WeightedGraph(std::move(vertices), std::move(edge_ids));
}

nlohmann::json witness_tree_to_json(const WitnessTree& t) {
    auto doc = graph_to_json(t.tree);
    doc["root"] = t.root;
    return doc;
}

WitnessTree witness_tree_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("root") || !doc["root"].is_string()) {
        throw ParseError("witness document needs a 'root' id");
    }
    WitnessTree t;
    t.tree = graph_from_json(doc);
    t.root = doc["root"].get<std::string>();
    if (!t.tree.contains(t.root)) {
        throw ParseError("root '" + t.root + "' is not a vertex of the tree");
    }
    t.leaf_map = leaves(t.tree);
    return t;
}

} // namespace scg
