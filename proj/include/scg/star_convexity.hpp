#pragma once

#include <map>
#include <set>
#include <variant>

#include "scg/graph.hpp"
#include "scg/monotone.hpp"

#include "json.hpp"

namespace scg {

// The core C(G) plus one monotone-path direction per (core vertex, leaf),
// Up preferred when both hold.
struct CoreReport {
    bool star_convex = false;
    std::set<VertexId> core;
    std::map<VertexId, std::map<VertexId, Direction>> witnesses;
};

// Core of a connected graph with a non-empty leaf set: the vertices from
// which every leaf is reachable by a weight-monotone path, the direction
// chosen per leaf. Throws DomainError when the graph has no leaves or is
// disconnected.
CoreReport core(const WeightedGraph& g);

bool is_star_convex(const WeightedGraph& g);

struct AlignmentViolation {
    VertexId leaf; // leaf whose root path breaks the shared monotonicity
};

// Looks for one direction shared by every path from u (in core ∩ leaves
// of a star-convex tree) to the other leaves; returns it when it exists
// (Up preferred when both remain admissible). No shared direction exists
// on some plateau trees — when u's single incident edge joins equal
// weights, distinct leaf paths can force opposite directions (e.g. leaf
// v05 in tests/fixtures/plateau_tree.json) — and then the violation
// names one leaf whose path rejects the direction the others force.
std::variant<Direction, AlignmentViolation>
check_leaf_core_alignment(const WeightedGraph& tree, const VertexId& u);

struct ExtremalReport {
    Weight max_value;        // max over V
    Weight min_value;        // min over V
    VertexId max_vertex;     // lexicographically smallest attainers
    VertexId min_vertex;
    Weight locus_max;        // extrema over V_leaf ∪ C
    Weight locus_min;
    VertexId locus_max_vertex;
    VertexId locus_min_vertex;
    bool max_attained_on_locus = false;
    bool min_attained_on_locus = false;

    bool holds() const { return max_attained_on_locus && min_attained_on_locus; }
};

// Checks that the extremal weights of a star-convex tree are attained on
// leaves-or-core. A failed check signals a bug; property suites assert it
// never happens.
ExtremalReport extremal_locus_check(const WeightedGraph& tree);

nlohmann::json core_report_to_json(const CoreReport& report);

} // namespace scg
