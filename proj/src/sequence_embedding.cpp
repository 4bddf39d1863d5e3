#include "scg/sequence_embedding.hpp"

#include <stdexcept>
#include <utility>

namespace scg {

namespace {

Rational parse_value(const nlohmann::json& value, const char* what) {
    if (value.is_string()) return Rational::from_decimal(value.get<std::string>());
    if (value.is_number_integer()) return Rational::from_integer(value.get<long long>());
    throw ParseError(std::string(what) + " must be a decimal string or integer, got '" +
                     value.dump() + "'");
}

std::string describe(const ClassViolation& v) {
    std::string out = to_string(v.kind);
    if (v.sequence_index > 0) out += " in sequence " + std::to_string(v.sequence_index);
    if (v.position > 0) out += " at position " + std::to_string(v.position);
    return out;
}

} // namespace

const char* to_string(ClassViolation::Kind kind) {
    switch (kind) {
        case ClassViolation::Kind::EmptyClass: return "empty-class";
        case ClassViolation::Kind::LengthMismatch: return "length-mismatch";
        case ClassViolation::Kind::EvenLength: return "even-length";
        case ClassViolation::Kind::TooShort: return "too-short";
        case ClassViolation::Kind::NotConvex: return "not-convex";
        case ClassViolation::Kind::MiddleMismatch: return "middle-mismatch";
        case ClassViolation::Kind::MinimumMismatch: return "minimum-mismatch";
        case ClassViolation::Kind::NegativeValue: return "negative-value";
    }
    return "unknown";
}

ConvexityCheck is_convex_sequence(const std::vector<Rational>& values) {
    if (values.size() < 3) throw DomainError("sequence shorter than 3 values");
    if (values.size() % 2 == 0) throw DomainError("sequence length must be odd");
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] + values[i] > values[i - 1] + values[i + 1]) {
            return {false, i + 1}; // 1-based position of the bulging entry
        }
    }
    return {true, 0};
}

ClassReport validate_class(const ConvexSequenceClass& c) {
    ClassReport report;
    report.sequence_count = c.sequences.size();
    if (c.sequences.empty()) {
        report.violations.push_back({ClassViolation::Kind::EmptyClass, 0, 0});
        return report;
    }

    const std::size_t length = c.sequences.front().size();
    bool lengths_usable = length >= 3 && length % 2 == 1;
    if (lengths_usable) report.half_length = (length - 1) / 2;

    for (std::size_t j = 0; j < c.sequences.size(); ++j) {
        const auto& seq = c.sequences[j];
        const std::size_t idx = j + 1;
        if (seq.size() != length) {
            report.violations.push_back({ClassViolation::Kind::LengthMismatch, idx, 0});
            continue;
        }
        if (seq.size() < 3) {
            report.violations.push_back({ClassViolation::Kind::TooShort, idx, 0});
            continue;
        }
        if (seq.size() % 2 == 0) {
            report.violations.push_back({ClassViolation::Kind::EvenLength, idx, 0});
            continue;
        }
        const auto convexity = is_convex_sequence(seq);
        if (!convexity.convex) {
            report.violations.push_back(
                {ClassViolation::Kind::NotConvex, idx, convexity.violation_index});
        }
        const std::size_t middle = (seq.size() - 1) / 2; // 0-based; position ℓ+1
        if (!(seq[middle] == c.hub_value)) {
            report.violations.push_back(
                {ClassViolation::Kind::MiddleMismatch, idx, middle + 1});
        }
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i].is_negative()) {
                report.violations.push_back(
                    {ClassViolation::Kind::NegativeValue, idx, i + 1});
                break;
            }
        }
    }

    if (c.hub_value.is_negative()) {
        report.violations.push_back({ClassViolation::Kind::NegativeValue, 0, 0});
    }

    // Condition (ii): the global minimum across all values equals the
    // middle value.
    bool have_min = false;
    Rational global_min;
    for (const auto& seq : c.sequences) {
        for (const auto& v : seq) {
            if (!have_min || v < global_min) {
                global_min = v;
                have_min = true;
            }
        }
    }
    if (have_min && !(global_min == c.hub_value)) {
        report.violations.push_back({ClassViolation::Kind::MinimumMismatch, 0, 0});
    }

    report.valid = report.violations.empty();
    if (report.valid) {
        // Convexity plus a global-minimum middle force the difference chain
        // d_1 ≤ … ≤ d_ℓ ≤ 0 ≤ d_{ℓ+1} ≤ … ≤ d_{2ℓ}; certify it directly.
        bool certified = true;
        const std::size_t ell = report.half_length;
        for (const auto& seq : c.sequences) {
            for (std::size_t i = 0; i + 1 < seq.size() && certified; ++i) {
                const auto diff = seq[i + 1] - seq[i];
                if (i < ell && diff.sign() > 0) certified = false;   // d_1..d_ℓ ≤ 0
                if (i >= ell && diff.sign() < 0) certified = false;  // d_{ℓ+1}.. ≥ 0
            }
        }
        report.bimonotone_certified = certified;
    }
    return report;
}

ClassValidationError::ClassValidationError(ClassReport report)
    : DomainError(report.violations.empty()
                      ? "convex-sequence class failed validation"
                      : "convex-sequence class failed validation: " +
                            describe(report.violations.front())),
      report_(std::move(report)) {}

WeightedGraph build_spider(const SpiderSpec& spec) {
    if (spec.legs == 0 || spec.leg_length == 0) {
        throw DomainError("spider needs at least one leg of positive length");
    }
    std::vector<std::pair<VertexId, Weight>> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    vertices.emplace_back(spec.hub, Rational::from_integer(0));
    for (std::size_t j = 1; j <= spec.legs; ++j) {
        for (std::size_t k = 1; k <= spec.leg_length; ++k) {
            const VertexId id = "L" + std::to_string(j) + "_" + std::to_string(k);
            vertices.emplace_back(id, Rational::from_integer(0));
            const VertexId prev =
                k == 1 ? spec.hub : "L" + std::to_string(j) + "_" + std::to_string(k - 1);
            edges.emplace_back(prev, id);
        }
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

Embedding embed(const ConvexSequenceClass& c) {
    auto report = validate_class(c);
    if (!report.valid) throw ClassValidationError(std::move(report));

    const std::size_t n = c.sequences.size();
    const std::size_t ell = report.half_length;

    Embedding out;
    out.spec = SpiderSpec{2 * n, ell, "hub"};

    std::vector<std::pair<VertexId, Weight>> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    vertices.emplace_back(out.spec.hub, c.hub_value);
    auto leg_vertex = [](std::size_t leg, std::size_t k) {
        return "L" + std::to_string(leg) + "_" + std::to_string(k);
    };
    for (std::size_t j = 1; j <= n; ++j) {
        const auto& seq = c.sequences[j - 1];
        // Entry i (1-based): i ≤ ℓ lands on leg 2j−1 at distance ℓ+1−i,
        // entry ℓ+1 is the hub, i ≥ ℓ+2 lands on leg 2j at distance i−(ℓ+1).
        for (std::size_t k = 1; k <= ell; ++k) {
            vertices.emplace_back(leg_vertex(2 * j - 1, k), seq[ell - k]);
            vertices.emplace_back(leg_vertex(2 * j, k), seq[ell + k]);
        }
        for (std::size_t leg : {2 * j - 1, 2 * j}) {
            for (std::size_t k = 1; k <= ell; ++k) {
                edges.emplace_back(k == 1 ? out.spec.hub : leg_vertex(leg, k - 1),
                                   leg_vertex(leg, k));
            }
        }
    }
    out.graph = WeightedGraph(std::move(vertices), std::move(edges));
    out.core_report = core(out.graph);
    if (!out.core_report.core.contains(out.spec.hub)) {
        throw std::logic_error("embedded spider lost the hub from its core");
    }
    return out;
}

ConvexSequenceClass class_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("hub_value") || !doc.contains("sequences")) {
        throw ParseError("class document needs 'hub_value' and 'sequences'");
    }
    if (!doc["sequences"].is_array()) {
        throw ParseError("'sequences' must be an array of value arrays");
    }
    ConvexSequenceClass c;
    c.hub_value = parse_value(doc["hub_value"], "hub_value");
    for (const auto& seq : doc["sequences"]) {
        if (!seq.is_array()) {
            throw ParseError("sequence must be an array, got '" + seq.dump() + "'");
        }
        std::vector<Rational> values;
        for (const auto& v : seq) values.push_back(parse_value(v, "sequence value"));
        c.sequences.push_back(std::move(values));
    }
    return c;
}

ConvexSequenceClass parse_class(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return class_from_json(doc);
}

nlohmann::json class_to_json(const ConvexSequenceClass& c) {
    nlohmann::json sequences = nlohmann::json::array();
    for (const auto& seq : c.sequences) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : seq) values.push_back(v.to_decimal_string());
        sequences.push_back(std::move(values));
    }
    return nlohmann::json{{"hub_value", c.hub_value.to_decimal_string()},
                          {"sequences", std::move(sequences)}};
}

nlohmann::json class_report_to_json(const ClassReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"kind", to_string(v.kind)},
                              {"sequence", v.sequence_index},
                              {"position", v.position}});
    }
    return nlohmann::json{
        {"valid", report.valid},
        {"sequence_count", report.sequence_count},
        {"half_length", report.half_length},
        {"bimonotone_certified", report.bimonotone_certified},
        {"violations", std::move(violations)},
    };
}

} // namespace scg
