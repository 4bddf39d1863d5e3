#include "scg/graph_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "scg/errors.hpp"
#include "scg/graph_io.hpp"
#include "scg/monotone.hpp"
#include "scg/star_convexity.hpp"

namespace scg {

namespace {

void check_weight_consistency(const WeightedGraph& g1, const WeightedGraph& g2) {
    for (const auto& id : g1.vertex_ids()) {
        if (!g2.contains(id)) continue;
        const auto& w1 = g1.weight(id);
        const auto& w2 = g2.weight(id);
        if (!(w1 == w2)) {
            throw DomainError("weight conflict on vertex '" + id + "': '" +
                              w1.to_decimal_string() + "' vs '" +
                              w2.to_decimal_string() + "'");
        }
    }
}

// Star-convexity of a possibly disconnected or leafless intermediate:
// connected, non-empty leaf set, non-empty core.
struct Analysis {
    bool connected = false;
    bool has_leaves = false;
    bool star_convex = false;
    std::set<VertexId> core_set;
};

Analysis analyze(const WeightedGraph& g) {
    Analysis a;
    a.connected = g.vertex_count() > 0 && is_connected(g);
    a.has_leaves = !leaves(g).empty();
    if (a.connected && a.has_leaves) {
        auto report = core(g);
        a.star_convex = report.star_convex;
        a.core_set = std::move(report.core);
    }
    return a;
}

nlohmann::json id_set_to_json(const std::set<VertexId>& ids) {
    return nlohmann::json(std::vector<VertexId>(ids.begin(), ids.end()));
}

} // namespace

WeightedGraph graph_union(const WeightedGraph& g1, const WeightedGraph& g2) {
    check_weight_consistency(g1, g2);
    std::vector<std::pair<VertexId, Weight>> vertices;
    for (const auto& id : g1.vertex_ids()) vertices.emplace_back(id, g1.weight(id));
    for (const auto& id : g2.vertex_ids()) {
        if (!g1.contains(id)) vertices.emplace_back(id, g2.weight(id));
    }
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : g1.edge_list()) edges.insert(e);
    for (const auto& e : g2.edge_list()) edges.insert(e);
    return WeightedGraph(std::move(vertices),
                         {edges.begin(), edges.end()});
}

WeightedGraph graph_intersection(const WeightedGraph& g1, const WeightedGraph& g2) {
    check_weight_consistency(g1, g2);
    std::vector<std::pair<VertexId, Weight>> vertices;
    for (const auto& id : g1.vertex_ids()) {
        if (g2.contains(id)) vertices.emplace_back(id, g1.weight(id));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : g1.edge_list()) {
        if (g2.contains(a) && g2.contains(b) && g2.has_edge(a, b)) {
            edges.emplace_back(a, b);
        }
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

OverlapReport overlap_analysis(const WeightedGraph& g1, const WeightedGraph& g2) {
    const auto united = graph_union(g1, g2);
    const auto intersected = graph_intersection(g1, g2);

    OverlapReport r;
    const auto a1 = analyze(g1);
    const auto a2 = analyze(g2);
    const auto au = analyze(united);
    const auto ai = analyze(intersected);

    r.g1_star_convex = a1.star_convex;
    r.g2_star_convex = a2.star_convex;
    r.g1_core = a1.core_set;
    r.g2_core = a2.core_set;
    r.union_connected = au.connected;
    r.union_has_leaves = au.has_leaves;
    r.union_star_convex = au.star_convex;
    r.union_core = au.core_set;
    r.intersection_connected = ai.connected;
    r.intersection_has_leaves = ai.has_leaves;
    r.intersection_star_convex = ai.star_convex;
    r.intersection_core = ai.core_set;

    std::set_intersection(r.g1_core.begin(), r.g1_core.end(), r.g2_core.begin(),
                          r.g2_core.end(),
                          std::inserter(r.core_intersection, r.core_intersection.end()));

    // Overlapping cores make the union star-convex whenever it has leaves;
    // this is proved, so a violation can only be a library bug.
    if (r.g1_star_convex && r.g2_star_convex && !r.core_intersection.empty() &&
        r.union_has_leaves && !r.union_star_convex) {
        throw std::logic_error(
            "union of star-convex graphs with overlapping cores lost star-convexity");
    }
    return r;
}

ProbeResult subgraph_core_probe(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (!is_subgraph(g1, g2)) {
        throw DomainError("first graph is not a subgraph of the second");
    }
    const auto report1 = core(g1);
    const auto report2 = core(g2);
    if (!report1.star_convex) throw DomainError("first graph is not star-convex");
    if (!report2.star_convex) throw DomainError("second graph is not star-convex");

    ProbeResult result;
    result.g1_digest = graph_digest(g1);
    result.g2_digest = graph_digest(g2);

    for (const auto& v : report1.core) {
        if (report2.core.contains(v)) continue;
        result.verdict = ProbeResult::Verdict::Counterexample;
        result.violating_vertex = v;
        const auto up = detail::reach_mask(g2, g2.index_of(v), Direction::Up);
        const auto down = detail::reach_mask(g2, g2.index_of(v), Direction::Down);
        for (const auto& leaf : leaves(g2)) {
            const auto li = g2.index_of(leaf);
            if (!up[li] && !down[li]) {
                result.failing_leaf = leaf;
                break;
            }
        }
        if (!result.failing_leaf.has_value()) {
            throw std::logic_error("vertex outside the core reaches every leaf");
        }
        break;
    }
    return result;
}

std::string graph_digest(const WeightedGraph& g) {
    const auto text = serialize_graph(g);
    std::uint64_t hash = 14695981039346656037ULL;
    for (const unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

nlohmann::json overlap_report_to_json(const OverlapReport& report) {
    return nlohmann::json{
        {"g1_star_convex", report.g1_star_convex},
        {"g2_star_convex", report.g2_star_convex},
        {"union_connected", report.union_connected},
        {"union_has_leaves", report.union_has_leaves},
        {"union_star_convex", report.union_star_convex},
        {"intersection_connected", report.intersection_connected},
        {"intersection_has_leaves", report.intersection_has_leaves},
        {"intersection_star_convex", report.intersection_star_convex},
        {"g1_core", id_set_to_json(report.g1_core)},
        {"g2_core", id_set_to_json(report.g2_core)},
        {"core_intersection", id_set_to_json(report.core_intersection)},
        {"union_core", id_set_to_json(report.union_core)},
        {"intersection_core", id_set_to_json(report.intersection_core)},
    };
}

nlohmann::json probe_result_to_json(const ProbeResult& result) {
    nlohmann::json witness;
    if (result.verdict == ProbeResult::Verdict::Counterexample) {
        witness = nlohmann::json{{"vertex", *result.violating_vertex},
                                 {"leaf", *result.failing_leaf}};
    }
    return nlohmann::json{
        {"g1_digest", result.g1_digest},
        {"g2_digest", result.g2_digest},
        {"verdict", result.verdict == ProbeResult::Verdict::Pass ? "PASS"
                                                                 : "COUNTEREXAMPLE"},
        {"witness", std::move(witness)},
    };
}

} // namespace scg
