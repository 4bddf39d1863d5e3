#include "scg/fuzz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "scg/errors.hpp"
#include "scg/graph_io.hpp"
#include "scg/graph_ops.hpp"
#include "scg/oracle.hpp"
#include "scg/random.hpp"
#include "scg/sequence_embedding.hpp"
#include "scg/star_convexity.hpp"
#include "scg/witness_tree.hpp"

namespace scg {

namespace {

constexpr std::size_t kAttemptBudget = 10000;

Rational density_pick(std::mt19937_64& rng) {
    switch (uniform_below(rng, 3)) {
        case 0: return Rational::from_integer(0);
        case 1: return Rational::from_fraction(1, 5);
        default: return Rational::from_fraction(2, 5);
    }
}

std::vector<Rational> grid_pick(std::mt19937_64& rng) {
    if (uniform_below(rng, 2) == 0) {
        return {Rational::from_integer(1), Rational::from_integer(2)};
    }
    return {Rational::from_integer(1), Rational::from_integer(2),
            Rational::from_integer(3)};
}

template <typename Rename>
WeightedGraph rename_graph(const WeightedGraph& g, Rename&& rename) {
    std::vector<std::pair<VertexId, Weight>> vertices;
    for (const auto& id : g.vertex_ids()) vertices.emplace_back(rename(id), g.weight(id));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : g.edge_list()) edges.emplace_back(rename(a), rename(b));
    return WeightedGraph(std::move(vertices), std::move(edges));
}

WeightedGraph remove_vertex(const WeightedGraph& g, const VertexId& v) {
    std::vector<std::pair<VertexId, Weight>> vertices;
    for (const auto& id : g.vertex_ids()) {
        if (id != v) vertices.emplace_back(id, g.weight(id));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : g.edge_list()) {
        if (a != v && b != v) edges.emplace_back(a, b);
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

WeightedGraph remove_edge(const WeightedGraph& g, const std::pair<VertexId, VertexId>& e) {
    std::vector<std::pair<VertexId, Weight>> vertices;
    for (const auto& id : g.vertex_ids()) vertices.emplace_back(id, g.weight(id));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& edge : g.edge_list()) {
        if (edge != e) edges.push_back(edge);
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

bool usable(const WeightedGraph& g) {
    return is_connected(g) && !leaves(g).empty() && is_star_convex(g);
}

} // namespace

WeightedGraph sample_star_convex_graph(std::uint64_t seed, std::size_t min_leaves) {
    std::uint64_t state = seed;
    for (std::size_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
        std::mt19937_64 rng(splitmix64(state));
        GeneratorParams p;
        p.min_vertices = 3;
        p.max_vertices = 8;
        p.weight_grid = grid_pick(rng);
        p.edge_density = density_pick(rng);
        p.seed = rng();
        const auto g = random_graph(p);
        if (leaves(g).size() < min_leaves) continue;
        if (!is_star_convex(g)) continue;
        return g;
    }
    throw std::logic_error("no star-convex graph found within the attempt budget");
}

WeightedGraph sample_star_convex_tree(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (std::size_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
        std::mt19937_64 rng(splitmix64(state));
        GeneratorParams p;
        p.min_vertices = 3;
        p.max_vertices = 10;
        p.weight_grid = grid_pick(rng);
        p.edge_density = Rational::from_integer(0);
        p.seed = rng();
        const auto g = random_graph(p);
        if (!is_star_convex(g)) continue;
        return g;
    }
    throw std::logic_error("no star-convex tree found within the attempt budget");
}

std::pair<WeightedGraph, WeightedGraph> sample_shared_core_pair(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (std::size_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
        const auto g1 = sample_star_convex_graph(splitmix64(state), 2);
        const auto g2 = sample_star_convex_graph(splitmix64(state), 2);
        const auto core1 = core(g1).core;
        const auto core2 = core(g2).core;

        // Lexicographically smallest weight-consistent core pair.
        const VertexId* u1 = nullptr;
        const VertexId* u2 = nullptr;
        for (const auto& a : core1) {
            for (const auto& b : core2) {
                if (g1.weight(a) == g2.weight(b)) {
                    u1 = &a;
                    u2 = &b;
                    break;
                }
            }
            if (u1 != nullptr) break;
        }
        if (u1 == nullptr) continue;

        const VertexId picked1 = *u1;
        const VertexId picked2 = *u2;
        auto left = rename_graph(g1, [&](const VertexId& id) {
            return id == picked1 ? VertexId("s") : "a_" + id;
        });
        auto right = rename_graph(g2, [&](const VertexId& id) {
            return id == picked2 ? VertexId("s") : "b_" + id;
        });
        return {std::move(left), std::move(right)};
    }
    throw std::logic_error("no shared-core pair found within the attempt budget");
}

std::pair<WeightedGraph, WeightedGraph> sample_nested_pair(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (std::size_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
        const auto g2 = sample_star_convex_graph(splitmix64(state), 1);
        std::mt19937_64 rng(splitmix64(state));

        std::vector<WeightedGraph> candidates;
        if (g2.vertex_count() >= 3) {
            for (const auto& leaf : leaves(g2)) {
                auto g1 = remove_vertex(g2, leaf);
                if (usable(g1)) candidates.push_back(std::move(g1));
            }
        }
        for (const auto& e : g2.edge_list()) {
            auto g1 = remove_edge(g2, e);
            if (usable(g1)) candidates.push_back(std::move(g1));
        }
        if (candidates.empty()) continue;
        auto g1 = candidates[uniform_below(rng, candidates.size())];
        return {std::move(g1), g2};
    }
    throw std::logic_error("no nested pair found within the attempt budget");
}

std::pair<WeightedGraph, WeightedGraph> probe_fixture_pair() {
    WeightedGraph g1({{"v1", Rational::from_integer(1)}, {"v2", Rational::from_integer(3)}},
                     {{"v1", "v2"}});
    WeightedGraph g2({{"v1", Rational::from_integer(1)},
                      {"v2", Rational::from_integer(3)},
                      {"v3", Rational::from_integer(2)}},
                     {{"v1", "v2"}, {"v2", "v3"}});
    return {std::move(g1), std::move(g2)};
}

nlohmann::json finding_to_json(const Finding& f) {
    return nlohmann::json{
        {"seed", f.seed},       {"property", f.property}, {"verdict", f.verdict},
        {"params", f.params},   {"witness", f.witness},
    };
}

const std::vector<std::string>& fuzz_property_names() {
    static const std::vector<std::string> names = {
        "core-oracle",   "embedding",  "extremal-locus", "leaf-alignment",
        "subgraph-core", "union-core", "witness-tree"};
    return names;
}

namespace {

nlohmann::json id_set(const std::set<VertexId>& ids) {
    return nlohmann::json(std::vector<VertexId>(ids.begin(), ids.end()));
}

Finding check_core_oracle(std::uint64_t seed) {
    Finding f{seed, "core-oracle", "PASS", {}, {}};
    std::uint64_t state = seed;
    for (std::size_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
        std::mt19937_64 rng(splitmix64(state));
        GeneratorParams p;
        p.min_vertices = 2;
        p.max_vertices = 8;
        p.weight_grid = {Rational::from_integer(0), Rational::from_integer(1),
                         Rational::from_integer(2), Rational::from_integer(3)};
        p.edge_density = density_pick(rng);
        p.seed = rng();
        const auto g = random_graph(p);
        if (leaves(g).empty()) continue;

        f.params = {{"digest", graph_digest(g)}, {"vertices", g.vertex_count()}};
        const auto fast = core(g).core;
        const auto brute = brute_core(g);
        if (fast != brute) {
            f.verdict = "FAIL";
            f.witness = {{"graph", graph_to_json(g)},
                         {"fast", id_set(fast)},
                         {"brute", id_set(brute)}};
        }
        return f;
    }
    throw std::logic_error("no leafy graph found within the attempt budget");
}

Finding check_subgraph_core(std::uint64_t seed) {
    Finding f{seed, "subgraph-core", "PASS", {}, {}};
    const bool fixture = seed % 100 == 0;
    const auto [g1, g2] = fixture ? probe_fixture_pair() : sample_nested_pair(seed);
    f.params = {{"fixture", fixture},
                {"g1_digest", graph_digest(g1)},
                {"g2_digest", graph_digest(g2)}};
    const auto probe = subgraph_core_probe(g1, g2);
    if (probe.verdict == ProbeResult::Verdict::Counterexample) {
        f.verdict = "COUNTEREXAMPLE";
        f.witness = probe_result_to_json(probe);
    }
    return f;
}

Finding check_union_core(std::uint64_t seed) {
    Finding f{seed, "union-core", "PASS", {}, {}};
    const auto [g1, g2] = sample_shared_core_pair(seed);
    f.params = {{"g1_digest", graph_digest(g1)}, {"g2_digest", graph_digest(g2)}};
    try {
        const auto report = overlap_analysis(g1, g2);
        if (report.core_intersection.empty() || !report.union_has_leaves) {
            f.verdict = "FAIL"; // sampler contract broken
            f.witness = {{"reason", "hypothesis lost"},
                         {"report", overlap_report_to_json(report)}};
        } else if (!report.union_star_convex) {
            f.verdict = "FAIL";
            f.witness = {{"reason", "union not star-convex"},
                         {"report", overlap_report_to_json(report)}};
        }
    } catch (const std::logic_error& e) {
        f.verdict = "FAIL";
        f.witness = {{"reason", e.what()}};
    }
    return f;
}

// The claimed alignment — one direction serving every leaf path from a
// leaf-core vertex — fails on weight plateaus: in the tree v01(1)–v02(2),
// v02–v03(2), v02–v04(3), v02–v06(2), v03–v05(2), the leaf v05 is in the
// core, yet its path to v01 is only non-increasing and its path to v04
// only non-decreasing. What is provable is the boundary: a violation
// forces w(u) to equal its neighbor's weight (a strict first step pins
// every path to the first step's direction). Genuine plateau violations
// are therefore recorded as counterexamples; anything else is a bug.
Finding check_leaf_alignment(std::uint64_t seed) {
    Finding f{seed, "leaf-alignment", "PASS", {}, {}};
    const auto tree = sample_star_convex_tree(seed);
    const auto report = core(tree);
    const auto leaf_set = leaves(tree);
    f.params = {{"digest", graph_digest(tree)}, {"vertices", tree.vertex_count()}};

    std::size_t checked = 0;
    std::size_t counterexamples = 0;
    for (const auto& u : report.core) {
        if (!leaf_set.contains(u)) continue;
        ++checked;

        // Direction sets of the unique tree paths, via the path engine.
        DirectionSet shared = DirectionSet::both();
        bool every_path_monotone = true;
        for (const auto& leaf : leaf_set) {
            const bool up = monotone_path(tree, u, leaf, Direction::Up).has_value();
            const bool down = monotone_path(tree, u, leaf, Direction::Down).has_value();
            if (!up && !down) {
                every_path_monotone = false;
                break;
            }
            shared.up = shared.up && up;
            shared.down = shared.down && down;
        }
        if (!every_path_monotone) {
            f.verdict = "FAIL"; // contradicts core membership: a bug
            f.witness = {{"graph", graph_to_json(tree)}, {"root", u},
                         {"reason", "leaf path not monotone"}};
            return f;
        }

        const auto result = check_leaf_core_alignment(tree, u);
        if (std::holds_alternative<Direction>(result)) {
            const auto d = std::get<Direction>(result);
            const bool consistent =
                shared.contains(d) && (!shared.up || d == Direction::Up);
            if (!consistent) {
                f.verdict = "FAIL";
                f.witness = {{"graph", graph_to_json(tree)}, {"root", u},
                             {"reason", "reported direction is wrong"}};
                return f;
            }
            continue;
        }

        const bool genuine = shared.empty();
        const bool plateau_first_edge =
            tree.weight(u) == tree.weight(tree.neighbors(u).front());
        if (!genuine || !plateau_first_edge) {
            f.verdict = "FAIL";
            f.witness = {{"graph", graph_to_json(tree)}, {"root", u},
                         {"reason", genuine ? "violation without a plateau first edge"
                                            : "spurious violation"}};
            return f;
        }
        ++counterexamples;
        if (f.witness.is_null()) {
            f.witness = {{"graph", graph_to_json(tree)},
                         {"root", u},
                         {"leaf", std::get<AlignmentViolation>(result).leaf}};
        }
    }
    f.params["core_leaves_checked"] = checked;
    f.params["alignment_counterexamples"] = counterexamples;
    if (counterexamples > 0) f.verdict = "COUNTEREXAMPLE";
    return f;
}

Finding check_extremal_locus(std::uint64_t seed) {
    Finding f{seed, "extremal-locus", "PASS", {}, {}};
    const auto tree = sample_star_convex_tree(seed);
    f.params = {{"digest", graph_digest(tree)}, {"vertices", tree.vertex_count()}};
    const auto report = extremal_locus_check(tree);
    if (!report.holds()) {
        f.verdict = "FAIL";
        f.witness = {{"graph", graph_to_json(tree)},
                     {"max_vertex", report.max_vertex},
                     {"min_vertex", report.min_vertex},
                     {"locus_max_vertex", report.locus_max_vertex},
                     {"locus_min_vertex", report.locus_min_vertex}};
    }
    return f;
}

Finding check_witness_tree(std::uint64_t seed) {
    Finding f{seed, "witness-tree", "PASS", {}, {}};
    const auto g = sample_star_convex_graph(seed, 2);
    f.params = {{"digest", graph_digest(g)}, {"vertices", g.vertex_count()}};
    GraftAudit audit;
    const auto witness = extract_witness_tree(g, std::nullopt, &audit);
    const auto check = verify_witness(g, witness);
    if (!check.accepted || audit.monotone_failures != 0) {
        f.verdict = "FAIL";
        f.witness = {{"graph", graph_to_json(g)},
                     {"tree", witness_tree_to_json(witness)},
                     {"failed_condition", check.failed_condition},
                     {"monotone_failures", audit.monotone_failures}};
    }
    f.params["grafts"] = audit.grafts;
    return f;
}

Finding check_embedding(std::uint64_t seed) {
    Finding f{seed, "embedding", "PASS", {}, {}};
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + uniform_below(rng, 5);
    const std::size_t ell = 1 + uniform_below(rng, 6);
    const auto c = random_convex_class(n, ell, rng());
    f.params = {{"n", n}, {"l", ell}};

    const auto report = validate_class(c);
    if (!report.valid || !report.bimonotone_certified) {
        f.verdict = "FAIL";
        f.witness = {{"reason", "generated class failed validation"},
                     {"class", class_to_json(c)},
                     {"report", class_report_to_json(report)}};
        return f;
    }
    const auto embedding = embed(c);
    const bool hub_in_core = embedding.core_report.core.contains(embedding.spec.hub);
    const bool shape_ok = embedding.spec.legs == 2 * n &&
                          embedding.spec.leg_length == ell &&
                          leaves(embedding.graph).size() == 2 * n &&
                          embedding.graph.vertex_count() == 2 * n * ell + 1;

    // Weight conservation: legs 2j−1, hub, 2j carry exactly sequence j.
    bool weights_ok = true;
    for (std::size_t j = 1; j <= n && weights_ok; ++j) {
        std::multiset<Rational> expected(c.sequences[j - 1].begin(),
                                         c.sequences[j - 1].end());
        std::multiset<Rational> actual{embedding.graph.weight(embedding.spec.hub)};
        for (std::size_t leg : {2 * j - 1, 2 * j}) {
            for (std::size_t k = 1; k <= ell; ++k) {
                actual.insert(embedding.graph.weight(
                    "L" + std::to_string(leg) + "_" + std::to_string(k)));
            }
        }
        weights_ok = expected == actual;
    }

    if (!hub_in_core || !shape_ok || !weights_ok) {
        f.verdict = "FAIL";
        f.witness = {{"class", class_to_json(c)},
                     {"hub_in_core", hub_in_core},
                     {"shape_ok", shape_ok},
                     {"weights_ok", weights_ok}};
    }
    return f;
}

} // namespace

Finding run_property(const std::string& property, std::uint64_t seed) {
    if (property == "core-oracle") return check_core_oracle(seed);
    if (property == "subgraph-core") return check_subgraph_core(seed);
    if (property == "union-core") return check_union_core(seed);
    if (property == "leaf-alignment") return check_leaf_alignment(seed);
    if (property == "extremal-locus") return check_extremal_locus(seed);
    if (property == "witness-tree") return check_witness_tree(seed);
    if (property == "embedding") return check_embedding(seed);
    throw DomainError("unknown property '" + property + "'");
}

std::vector<Finding> run_campaign(const std::vector<std::string>& properties,
                                  std::uint64_t first_seed, std::uint64_t last_seed) {
    if (last_seed < first_seed) throw DomainError("empty seed range");
    std::vector<Finding> findings;
    for (const auto& property : properties) {
        for (std::uint64_t seed = first_seed;; ++seed) {
            findings.push_back(run_property(property, seed));
            if (seed == last_seed) break;
        }
    }
    return findings;
}

} // namespace scg
