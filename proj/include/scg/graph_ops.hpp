#pragma once

#include <optional>
#include <set>
#include <string>

#include "scg/graph.hpp"

#include "json.hpp"

namespace scg {

// Id-based union: V1 ∪ V2, E1 ∪ E2, weights inherited. Shared ids must
// carry equal weights; a conflict raises DomainError quoting both values.
WeightedGraph graph_union(const WeightedGraph& g1, const WeightedGraph& g2);

// Id-based intersection: V1 ∩ V2, E1 ∩ E2, same weight-consistency rule.
WeightedGraph graph_intersection(const WeightedGraph& g1, const WeightedGraph& g2);

// Core overlap analysis of two star-convex graphs. The union/intersection
// intermediates may be disconnected or leafless, so their star-convexity
// here means: connected, non-empty leaf set, non-empty core. The
// hypothesis flags record which of those preconditions held.
struct OverlapReport {
    bool g1_star_convex = false;
    bool g2_star_convex = false;
    bool union_connected = false;
    bool union_has_leaves = false;
    bool union_star_convex = false;
    bool intersection_connected = false;
    bool intersection_has_leaves = false;
    bool intersection_star_convex = false;
    std::set<VertexId> g1_core;
    std::set<VertexId> g2_core;
    std::set<VertexId> core_intersection;
    std::set<VertexId> union_core;
    std::set<VertexId> intersection_core;
};

// Computes both cores, their intersection, and the star-convexity of the
// union and the intersection. When both inputs are star-convex, the cores
// intersect and the union has leaves, the union is provably star-convex;
// a violation would be a library bug and raises std::logic_error.
OverlapReport overlap_analysis(const WeightedGraph& g1, const WeightedGraph& g2);

// Probe of the conjecture "g1 ⊆ g2 implies core(g1) ⊆ core(g2)". The
// conjecture is false in general, so a counterexample is a recorded
// finding, not an error: the lexicographically smallest core vertex of g1
// outside core(g2) is returned with the smallest leaf of g2 it cannot
// reach monotonically.
struct ProbeResult {
    enum class Verdict { Pass, Counterexample };
    Verdict verdict = Verdict::Pass;
    std::optional<VertexId> violating_vertex;
    std::optional<VertexId> failing_leaf;
    std::string g1_digest;
    std::string g2_digest;
};

// Requires g1 to be a subgraph of g2 and both graphs star-convex.
ProbeResult subgraph_core_probe(const WeightedGraph& g1, const WeightedGraph& g2);

// Stable 64-bit FNV-1a digest of the canonical serialization, as 16 hex
// characters; identifies probe inputs in counterexample logs.
std::string graph_digest(const WeightedGraph& g);

nlohmann::json overlap_report_to_json(const OverlapReport& report);
nlohmann::json probe_result_to_json(const ProbeResult& result);

} // namespace scg
