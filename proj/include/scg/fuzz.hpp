#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scg/graph.hpp"

#include "json.hpp"

namespace scg {

// Rejection samplers behind the property campaign. All are pure functions
// of the seed; each raises std::logic_error only if it cannot find an
// admissible input within a generous attempt budget (which would indicate
// a generator bug, not bad luck).

// Connected star-convex graph with at least min_leaves leaves.
WeightedGraph sample_star_convex_graph(std::uint64_t seed, std::size_t min_leaves = 1);

// Star-convex tree (density-zero generation), at least two leaves.
WeightedGraph sample_star_convex_tree(std::uint64_t seed);

// Two star-convex graphs over disjoint ids except one shared vertex "s"
// that lies in both cores with one consistent weight; the union keeps a
// non-empty leaf set.
std::pair<WeightedGraph, WeightedGraph> sample_shared_core_pair(std::uint64_t seed);

// (subgraph, supergraph): the first is the second minus one leaf vertex or
// one non-bridge edge, both star-convex.
std::pair<WeightedGraph, WeightedGraph> sample_nested_pair(std::uint64_t seed);

// The deterministic conjecture-refuting pair: v1(1)–v2(3) inside
// v1(1)–v2(3)–v3(2). core of the path is {v1,v2} but only v2 keeps a
// monotone path to the new leaf v3.
std::pair<WeightedGraph, WeightedGraph> probe_fixture_pair();

struct Finding {
    std::uint64_t seed = 0;
    std::string property;
    std::string verdict; // "PASS" | "FAIL" | "COUNTEREXAMPLE"
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json witness; // null unless the verdict carries evidence
};

nlohmann::json finding_to_json(const Finding& f);

// "core-oracle", "embedding", "extremal-locus", "leaf-alignment",
// "subgraph-core", "union-core", "witness-tree".
const std::vector<std::string>& fuzz_property_names();

// One property evaluation at one seed. FAIL marks a violated invariant or
// a fast/brute disagreement (a bug); COUNTEREXAMPLE marks refuting
// evidence a probe is built to hunt for (expected for subgraph-core,
// possible for leaf-alignment on plateau trees). Unknown property names
// raise DomainError.
Finding run_property(const std::string& property, std::uint64_t seed);

// Inclusive seed range over the selected properties, findings in
// (property-list order, seed) order.
std::vector<Finding> run_campaign(const std::vector<std::string>& properties,
                                  std::uint64_t first_seed, std::uint64_t last_seed);

} // namespace scg
