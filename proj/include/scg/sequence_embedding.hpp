#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scg/errors.hpp"
#include "scg/graph.hpp"
#include "scg/star_convexity.hpp"

#include "json.hpp"

namespace scg {

// A class of convex sequences sharing an odd length 2ℓ+1 and a middle
// value. Sequences are 1-indexed in all reported positions.
struct ConvexSequenceClass {
    std::vector<std::vector<Rational>> sequences;
    Rational hub_value;
};

struct ConvexityCheck {
    bool convex = false;
    std::size_t violation_index = 0; // 1-based interior index of the first failure
};

// Second-difference test: convex ⇔ values[i-1] + values[i+1] ≥ 2·values[i]
// for every interior i. Requires an odd length ≥ 3.
ConvexityCheck is_convex_sequence(const std::vector<Rational>& values);

struct ClassViolation {
    enum class Kind {
        EmptyClass,
        LengthMismatch,
        EvenLength,
        TooShort,
        NotConvex,
        MiddleMismatch,
        MinimumMismatch,
        NegativeValue,
    };
    Kind kind;
    std::size_t sequence_index = 0; // 1-based; 0 for class-level findings
    std::size_t position = 0;       // 1-based; 0 when not positional
};

const char* to_string(ClassViolation::Kind kind);

struct ClassReport {
    bool valid = false;
    std::size_t sequence_count = 0; // n
    std::size_t half_length = 0;    // ℓ, from length 2ℓ+1
    std::vector<ClassViolation> violations;
    // Certified on valid classes: each sequence is non-increasing up to the
    // middle and non-decreasing after it, which the embedding relies on.
    bool bimonotone_certified = false;
};

// Checks equal odd lengths, per-sequence convexity, the shared middle
// value, the global minimum equalling the middle value, and non-negative
// values (weights must be non-negative). All violations are listed.
ClassReport validate_class(const ConvexSequenceClass& c);

class ClassValidationError : public DomainError {
public:
    explicit ClassValidationError(ClassReport report);
    const ClassReport& report() const { return report_; }

private:
    ClassReport report_;
};

struct SpiderSpec {
    std::size_t legs = 0;
    std::size_t leg_length = 0;
    VertexId hub = "hub";

    // Fewer than 3 legs leaves no vertex of degree > 2: the spider is a
    // path. Permitted (the smallest embeddings produce 2 legs) but flagged.
    bool degenerate() const { return legs < 3; }
};

// Hub "hub" plus legs·leg_length vertices "L<j>_<k>" (leg j, position k,
// k=1 adjacent to the hub), all weights zero placeholders.
WeightedGraph build_spider(const SpiderSpec& spec);

struct Embedding {
    WeightedGraph graph;
    CoreReport core_report;
    SpiderSpec spec;
};

// Embeds a valid class of n sequences of length 2ℓ+1 onto a regular spider
// with 2n legs of length ℓ: sequence j runs along the path through the hub
// formed by legs 2j−1 and 2j, entry 1 on the leaf of leg 2j−1, entry ℓ+1
// on the hub, entry 2ℓ+1 on the leaf of leg 2j. The result is certified
// star-convex with the hub in the core. Invalid classes raise
// ClassValidationError carrying the report.
Embedding embed(const ConvexSequenceClass& c);

// Class JSON: {"hub_value":<decimal-string>,"sequences":[[...]...]};
// values as decimal strings or integers.
ConvexSequenceClass class_from_json(const nlohmann::json& doc);
ConvexSequenceClass parse_class(const std::string& text);
nlohmann::json class_to_json(const ConvexSequenceClass& c);
nlohmann::json class_report_to_json(const ClassReport& report);

} // namespace scg
