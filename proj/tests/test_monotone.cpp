#include <set>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"

#include "scg/errors.hpp"
#include "scg/graph_io.hpp"
#include "scg/graph_ops.hpp"
#include "scg/monotone.hpp"

#include "support.hpp"

using scg::Direction;
using scg::DirectionSet;
using scg::DomainError;
using scg::MonotonePath;
using scg::PathRejection;
using scgtest::load_fixture;
using scgtest::make_graph;

namespace {

scg::WeightedGraph fixture_overlap() {
    return scg::graph_intersection(load_fixture("sample_a.json"),
                                   load_fixture("sample_b.json"));
}

} // namespace

TEST_SUITE("monotone") {

TEST_CASE("direction names round-trip") {
    CHECK(std::string(scg::to_string(Direction::Up)) == "UP");
    CHECK(std::string(scg::to_string(Direction::Down)) == "DOWN");
    CHECK(scg::direction_from_string("UP") == Direction::Up);
    CHECK(scg::direction_from_string("DOWN") == Direction::Down);
    CHECK_THROWS_AS(scg::direction_from_string("sideways"), scg::ParseError);
    CHECK(scg::opposite(Direction::Up) == Direction::Down);
    CHECK(scg::opposite(Direction::Down) == Direction::Up);
}

TEST_CASE("oriented digraph orients strict edges one way and plateaus both ways") {
    const auto g = make_graph({{"a", "1"}, {"b", "2"}, {"c", "2"}},
                              {{"a", "b"}, {"b", "c"}});
    const scg::OrientedDigraph up(g, Direction::Up);
    CHECK(up.has_arc("a", "b"));
    CHECK_FALSE(up.has_arc("b", "a"));
    CHECK(up.has_arc("b", "c"));
    CHECK(up.has_arc("c", "b"));
    const scg::OrientedDigraph down(g, Direction::Down);
    CHECK(down.has_arc("b", "a"));
    CHECK_FALSE(down.has_arc("a", "b"));
    CHECK(down.has_arc("b", "c"));
    CHECK(down.has_arc("c", "b"));
    CHECK(up.successors("b") == std::vector<std::string>{"c"});
}

TEST_CASE("reachability on the overlap of the bundled samples") {
    const auto overlap = fixture_overlap();
    CHECK(scg::reach_set(overlap, "v3", Direction::Down) ==
          std::set<std::string>{"v1", "v2", "v3", "v5"});
    CHECK(scg::reach_set(overlap, "v4", Direction::Down) ==
          std::set<std::string>{"v2", "v4"});
    CHECK_THROWS_AS(scg::reach_set(overlap, "ghost", Direction::Up), DomainError);
}

TEST_CASE("reachability is dual to reversed monotone paths") {
    for (const char* name : {"sample_a.json", "sample_b.json", "plateau_tree.json"}) {
        const auto g = load_fixture(name);
        for (const auto& leaf : scg::leaves(g)) {
            const auto down = scg::reach_set(g, leaf, Direction::Down);
            for (const auto& u : g.vertex_ids()) {
                const bool reach = down.contains(u);
                const bool path =
                    scg::monotone_path(g, u, leaf, Direction::Up).has_value();
                CHECK(reach == path);
            }
        }
    }
}

TEST_CASE("monotone path is shortest with lexicographic tie-break") {
    const auto diamond = make_graph(
        {{"a", "1"}, {"b", "2"}, {"c", "2"}, {"d", "3"}},
        {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    const auto p = scg::monotone_path(diamond, "a", "d", Direction::Up);
    REQUIRE(p.has_value());
    CHECK(p->vertices == std::vector<std::string>{"a", "b", "d"});
    CHECK(p->directions.up);
    CHECK_FALSE(p->directions.down);

    const auto overlap = fixture_overlap();
    CHECK_FALSE(scg::monotone_path(overlap, "v1", "v4", Direction::Up).has_value());
    CHECK_FALSE(scg::monotone_path(overlap, "v1", "v4", Direction::Down).has_value());

    const auto self = scg::monotone_path(diamond, "b", "b", Direction::Down);
    REQUIRE(self.has_value());
    CHECK(self->vertices == std::vector<std::string>{"b"});
    CHECK(self->directions == DirectionSet::both());
}

TEST_CASE("path classification verifies simplicity, adjacency and monotonicity") {
    const auto a = load_fixture("sample_a.json");

    const auto ok = scg::classify_path(a, {"v1", "v3", "v5"});
    REQUIRE(std::holds_alternative<MonotonePath>(ok));
    const auto& mp = std::get<MonotonePath>(ok);
    CHECK(mp.directions.up);
    CHECK_FALSE(mp.directions.down);

    const auto wobble = scg::classify_path(a, {"v1", "v3", "v2"});
    REQUIRE(std::holds_alternative<PathRejection>(wobble));
    CHECK(std::get<PathRejection>(wobble).kind == PathRejection::Kind::NotMonotone);
    CHECK(std::get<PathRejection>(wobble).index == 2);

    const auto empty = scg::classify_path(a, {});
    REQUIRE(std::holds_alternative<PathRejection>(empty));
    CHECK(std::get<PathRejection>(empty).kind == PathRejection::Kind::EmptySequence);

    const auto unknown = scg::classify_path(a, {"v1", "zz"});
    REQUIRE(std::holds_alternative<PathRejection>(unknown));
    CHECK(std::get<PathRejection>(unknown).kind == PathRejection::Kind::UnknownVertex);
    CHECK(std::get<PathRejection>(unknown).index == 1);

    const auto repeated = scg::classify_path(a, {"v1", "v3", "v1"});
    REQUIRE(std::holds_alternative<PathRejection>(repeated));
    CHECK(std::get<PathRejection>(repeated).kind == PathRejection::Kind::RepeatedVertex);
    CHECK(std::get<PathRejection>(repeated).index == 2);

    const auto apart = scg::classify_path(a, {"v1", "v5"});
    REQUIRE(std::holds_alternative<PathRejection>(apart));
    CHECK(std::get<PathRejection>(apart).kind == PathRejection::Kind::NotAdjacent);
    CHECK(std::get<PathRejection>(apart).index == 1);

    const auto single = scg::classify_path(a, {"v3"});
    REQUIRE(std::holds_alternative<MonotonePath>(single));
    CHECK(std::get<MonotonePath>(single).directions == DirectionSet::both());
}

TEST_CASE("constant-weight paths carry both directions") {
    const auto flat = make_graph({{"a", "2"}, {"b", "2"}, {"c", "2"}},
                                 {{"a", "b"}, {"b", "c"}});
    const auto p = scg::classify_path(flat, {"a", "b", "c"});
    REQUIRE(std::holds_alternative<MonotonePath>(p));
    CHECK(std::get<MonotonePath>(p).directions == DirectionSet::both());
}

} // TEST_SUITE
