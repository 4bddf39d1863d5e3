#pragma once

#include <optional>
#include <set>
#include <string>

#include "scg/graph.hpp"
#include "scg/star_convexity.hpp"

#include "json.hpp"

namespace scg {

// A star-convex subtree of a source graph with the same leaf set, plus the
// core vertex the construction ended on. leaf_map always equals
// leaves(tree).
struct WitnessTree {
    WeightedGraph tree;
    VertexId root;
    std::set<VertexId> leaf_map;
};

// Instrumentation for the construction: after every graft the whole
// working tree is re-checked for root-path monotonicity when an audit is
// attached. monotone_failures staying 0 is a tested invariant.
struct GraftAudit {
    std::size_t grafts = 0;
    std::size_t paths_checked = 0;
    std::size_t monotone_failures = 0;
};

// Builds a witness tree for a star-convex graph with at least two leaves.
// Grows a tree from the root (given, else the lexicographically smallest
// core vertex) by grafting, per leaf in lexicographic order, the suffix of
// a monotone root-to-leaf path (Up preferred, shortest, lexicographically
// smallest) after its last contact with the tree; then trims to the
// minimal subtree spanning the source leaves. The returned root is the
// projection of the construction root onto the trimmed tree and lies in
// its core. Throws DomainError when g is not star-convex, has fewer than
// two leaves, or the requested root is outside the core.
WitnessTree extract_witness_tree(const WeightedGraph& g,
                                 const std::optional<VertexId>& root = std::nullopt,
                                 GraftAudit* audit = nullptr);

struct WitnessCheck {
    bool accepted = false;
    std::string failed_condition; // empty when accepted

    explicit operator bool() const { return accepted; }
};

// Accepts t exactly when t.tree is a subgraph of g (same weights), a tree,
// star-convex, has the same leaf set as g, and carries its root in its
// core. The first failed condition is reported as one of "subgraph",
// "tree", "star-convexity", "leaf-set", "root-in-core". Acceptance
// certifies that g itself is star-convex.
WitnessCheck verify_witness(const WeightedGraph& g, const WitnessTree& t);

// Minimal connected subtree of a tree containing all terminals; its leaf
// set is a subset of the terminals. Requires a tree, known terminals and
// at least two of them.
WeightedGraph steiner_subtree(const WeightedGraph& t, const std::set<VertexId>& terminals);

// Graph document plus "root".
nlohmann::json witness_tree_to_json(const WitnessTree& t);
WitnessTree witness_tree_from_json(const nlohmann::json& doc);

} // namespace scg
