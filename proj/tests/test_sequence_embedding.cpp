#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "scg/errors.hpp"
#include "scg/graph_io.hpp"
#include "scg/sequence_embedding.hpp"

#include "support.hpp"

using scg::ClassValidationError;
using scg::ClassViolation;
using scg::ConvexSequenceClass;
using scg::DomainError;
using scg::ParseError;
using scg::Rational;
using scgtest::fixture_path;
using scgtest::R;

namespace {

std::vector<Rational> seq(std::initializer_list<const char*> values) {
    std::vector<Rational> out;
    for (const char* v : values) out.push_back(R(v));
    return out;
}

ConvexSequenceClass load_class(const std::string& name) {
    return scg::parse_class(scg::read_text_file(fixture_path(name)));
}

} // namespace

TEST_SUITE("sequence-embedding") {

TEST_CASE("convexity is the second-difference test") {
    CHECK(scg::is_convex_sequence(seq({"5", "2", "0", "1", "4"})).convex);
    CHECK(scg::is_convex_sequence(seq({"0", "0", "0"})).convex);
    const auto bulge = scg::is_convex_sequence(seq({"0", "2", "1"}));
    CHECK_FALSE(bulge.convex);
    CHECK(bulge.violation_index == 2);
    const auto late = scg::is_convex_sequence(seq({"5", "1", "0", "3", "4"}));
    CHECK_FALSE(late.convex);
    CHECK(late.violation_index == 4);
    CHECK_THROWS_AS(scg::is_convex_sequence(seq({"1", "2"})), DomainError);
    CHECK_THROWS_AS(scg::is_convex_sequence(seq({"1", "2", "3", "4"})), DomainError);
}

TEST_CASE("the bundled class validates and certifies bimonotonicity") {
    const auto c = load_class("class_pair.json");
    const auto report = scg::validate_class(c);
    CHECK(report.valid);
    CHECK(report.sequence_count == 2);
    CHECK(report.half_length == 2);
    CHECK(report.violations.empty());
    CHECK(report.bimonotone_certified);
}

TEST_CASE("violations are localized per kind") {
    const auto middle = scg::validate_class(load_class("class_bad_middle.json"));
    CHECK_FALSE(middle.valid);
    REQUIRE(middle.violations.size() == 1);
    CHECK(middle.violations[0].kind == ClassViolation::Kind::MiddleMismatch);
    CHECK(middle.violations[0].sequence_index == 2);
    CHECK(middle.violations[0].position == 2);

    const auto minimum = scg::validate_class({{seq({"3", "1", "0"})}, R("1")});
    CHECK_FALSE(minimum.valid);
    REQUIRE(minimum.violations.size() == 1);
    CHECK(minimum.violations[0].kind == ClassViolation::Kind::MinimumMismatch);
    CHECK(minimum.violations[0].sequence_index == 0); // class-level finding

    const auto bulge = scg::validate_class({{seq({"5", "1", "0", "3", "4"})}, R("0")});
    CHECK_FALSE(bulge.valid);
    REQUIRE(bulge.violations.size() == 1);
    CHECK(bulge.violations[0].kind == ClassViolation::Kind::NotConvex);
    CHECK(bulge.violations[0].sequence_index == 1);
    CHECK(bulge.violations[0].position == 4);

    const auto empty = scg::validate_class({{}, R("0")});
    REQUIRE(empty.violations.size() == 1);
    CHECK(empty.violations[0].kind == ClassViolation::Kind::EmptyClass);

    const auto lengths = scg::validate_class(
        {{seq({"1", "0", "1"}), seq({"2", "1", "0", "1", "2"})}, R("0")});
    REQUIRE(lengths.violations.size() == 1);
    CHECK(lengths.violations[0].kind == ClassViolation::Kind::LengthMismatch);
    CHECK(lengths.violations[0].sequence_index == 2);

    const auto even = scg::validate_class({{seq({"1", "0", "0", "1"})}, R("0")});
    REQUIRE(even.violations.size() == 1);
    CHECK(even.violations[0].kind == ClassViolation::Kind::EvenLength);

    const auto negative = scg::validate_class({{seq({"3", "-1", "2"})}, R("-1")});
    CHECK_FALSE(negative.valid);
    bool saw_negative = false;
    for (const auto& v : negative.violations) {
        if (v.kind == ClassViolation::Kind::NegativeValue) saw_negative = true;
    }
    CHECK(saw_negative);

    CHECK(std::string(scg::to_string(ClassViolation::Kind::MiddleMismatch)) ==
          "middle-mismatch");
    CHECK(std::string(scg::to_string(ClassViolation::Kind::NotConvex)) == "not-convex");
}

TEST_CASE("multiple violations are all listed") {
    const auto report = scg::validate_class(
        {{seq({"2", "0", "1"}), seq({"0", "2", "1"})}, R("0")});
    CHECK_FALSE(report.valid);
    CHECK(report.violations.size() == 2); // seq 2: bulge and wrong middle
}

TEST_CASE("spiders are built hub-outward") {
    const auto spider = scg::build_spider({3, 2, "hub"});
    CHECK(spider.vertex_count() == 7);
    CHECK(spider.degree("hub") == 3);
    CHECK(spider.has_edge("hub", "L1_1"));
    CHECK(spider.has_edge("L1_1", "L1_2"));
    CHECK(spider.has_edge("hub", "L3_1"));
    CHECK(spider.weight("L2_2") == R("0"));
    CHECK_FALSE(scg::SpiderSpec{3, 2, "hub"}.degenerate());
    CHECK(scg::SpiderSpec{2, 4, "hub"}.degenerate());
    CHECK_THROWS_AS(scg::build_spider({0, 2, "hub"}), DomainError);
    CHECK_THROWS_AS(scg::build_spider({3, 0, "hub"}), DomainError);
}

TEST_CASE("embedding lays each sequence along its leg pair") {
    const auto emb = scg::embed(load_class("class_pair.json"));
    CHECK(emb.spec.legs == 4);
    CHECK(emb.spec.leg_length == 2);
    CHECK_FALSE(emb.spec.degenerate());
    CHECK(emb.graph.vertex_count() == 9);
    CHECK(emb.graph.weight("hub") == R("0"));

    // Sequence (5,2,0,1,4): entries 1,2 outward on leg 1, entries 4,5 on leg 2.
    CHECK(emb.graph.weight("L1_2") == R("5"));
    CHECK(emb.graph.weight("L1_1") == R("2"));
    CHECK(emb.graph.weight("L2_1") == R("1"));
    CHECK(emb.graph.weight("L2_2") == R("4"));
    // Sequence (3,1,0,0,2) on legs 3 and 4.
    CHECK(emb.graph.weight("L3_2") == R("3"));
    CHECK(emb.graph.weight("L3_1") == R("1"));
    CHECK(emb.graph.weight("L4_1") == R("0"));
    CHECK(emb.graph.weight("L4_2") == R("2"));

    CHECK(emb.core_report.star_convex);
    CHECK(emb.core_report.core.contains("hub"));
    CHECK(scg::leaves(emb.graph) ==
          std::set<std::string>{"L1_2", "L2_2", "L3_2", "L4_2"});
}

TEST_CASE("single-sequence classes embed onto a degenerate two-leg spider") {
    const auto emb = scg::embed({{seq({"2", "1", "0", "1", "2"})}, R("0")});
    CHECK(emb.spec.legs == 2);
    CHECK(emb.spec.degenerate());
    CHECK(emb.core_report.core.contains("hub"));
}

TEST_CASE("invalid classes are rejected with the report attached") {
    try {
        scg::embed(load_class("class_bad_middle.json"));
        FAIL("embed accepted an invalid class");
    } catch (const ClassValidationError& e) {
        CHECK_FALSE(e.report().valid);
        REQUIRE(e.report().violations.size() == 1);
        CHECK(e.report().violations[0].kind == ClassViolation::Kind::MiddleMismatch);
        CHECK(std::string(e.what()).find("middle-mismatch") != std::string::npos);
    }
}

TEST_CASE("class documents round-trip and reject malformed input") {
    const auto c = load_class("class_pair.json");
    const auto doc = scg::class_to_json(c);
    CHECK(doc["hub_value"] == "0");
    const auto back = scg::class_from_json(doc);
    CHECK(back.hub_value == c.hub_value);
    CHECK(back.sequences == c.sequences);

    CHECK_THROWS_AS(scg::parse_class("{\"sequences\":[]}"), ParseError);
    CHECK_THROWS_AS(scg::parse_class("{\"hub_value\":\"0\"}"), ParseError);
    CHECK_THROWS_AS(scg::parse_class("{\"hub_value\":0.5,\"sequences\":[]}"), ParseError);
    CHECK_THROWS_AS(scg::parse_class("{\"hub_value\":\"0\",\"sequences\":[[0.5]]}"),
                    ParseError);
    CHECK_THROWS_AS(scg::parse_class("{\"hub_value\":\"0\",\"sequences\":4}"), ParseError);
    CHECK_THROWS_AS(scg::parse_class("nope"), ParseError);

    const auto integers =
        scg::parse_class("{\"hub_value\":1,\"sequences\":[[3,1,1]]}");
    CHECK(integers.hub_value == R("1"));
    CHECK(integers.sequences[0][0] == R("3"));
}

TEST_CASE("class report serializes kebab-case kinds") {
    const auto report = scg::validate_class(load_class("class_bad_middle.json"));
    const auto doc = scg::class_report_to_json(report);
    CHECK(doc["valid"] == false);
    CHECK(doc["violations"][0]["kind"] == "middle-mismatch");
    CHECK(doc["violations"][0]["sequence"] == 2);
    CHECK(doc["violations"][0]["position"] == 2);
}

} // TEST_SUITE
