#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "scg/errors.hpp"
#include "scg/fuzz.hpp"
#include "scg/graph_io.hpp"
#include "scg/graph_ops.hpp"
#include "scg/oracle.hpp"
#include "scg/sequence_embedding.hpp"
#include "scg/star_convexity.hpp"
#include "scg/witness_tree.hpp"

#include "CLI11.hpp"

namespace {

using namespace scg;

// stdout is reserved for machine-readable payloads; --output redirects the
// payload to a file, diagnostics always go to stderr.
void emit(const std::string& output_path, const std::string& payload) {
    if (output_path.empty()) {
        std::cout << payload;
    } else {
        write_text_file(output_path, payload);
    }
}

WeightedGraph load_graph(const std::string& path) {
    return parse_graph(read_text_file(path));
}

std::uint64_t parse_unsigned(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("malformed number '" + text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range '" + text + "'");
    }
}

// "A..B" (inclusive) or a single seed "N".
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const auto n = parse_unsigned(text);
        return {n, n};
    }
    const auto first = parse_unsigned(text.substr(0, pos));
    const auto last = parse_unsigned(text.substr(pos + 2));
    if (last < first) throw ParseError("empty seed range '" + text + "'");
    return {first, last};
}

std::vector<std::string> parse_props(const std::string& text) {
    if (text == "all") return fuzz_property_names();
    std::vector<std::string> props;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) throw ParseError("malformed property list '" + text + "'");
        const auto& known = fuzz_property_names();
        if (std::find(known.begin(), known.end(), token) == known.end()) {
            throw DomainError("unknown property '" + token + "'");
        }
        props.push_back(token);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return props;
}

std::size_t oracle_bound_from_env() {
    const char* env = std::getenv("SCG_ORACLE_BOUND");
    if (env == nullptr) return kDefaultOracleBound;
    return static_cast<std::size_t>(parse_unsigned(env));
}

nlohmann::json id_set_json(const std::set<VertexId>& ids) {
    return nlohmann::json(std::vector<VertexId>(ids.begin(), ids.end()));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-convex weighted graph toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string graph_path;
    std::string second_path;
    std::string output_path;
    std::string root_id;
    std::string props_text = "all";
    std::string seeds_text = "0..19";
    bool analyze = false;
    bool annotate = false;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output_path, "write the payload to a file");
    };

    auto* check = app.add_subcommand("check", "decide star-convexity, print the core report");
    check->add_option("graph", graph_path, "graph JSON file")->required();
    add_output(check);
    check->callback([&] {
        const auto report = core(load_graph(graph_path));
        emit(output_path, canonical_dump(core_report_to_json(report)));
        exit_code = report.star_convex ? 0 : 1;
    });

    auto* core_cmd = app.add_subcommand("core", "compute the core report");
    core_cmd->add_option("graph", graph_path, "graph JSON file")->required();
    add_output(core_cmd);
    core_cmd->callback([&] {
        const auto report = core(load_graph(graph_path));
        emit(output_path, canonical_dump(core_report_to_json(report)));
    });

    auto* extract = app.add_subcommand("extract-tree", "extract a witness tree");
    extract->add_option("graph", graph_path, "graph JSON file")->required();
    extract->add_option("--root", root_id, "core vertex to grow from");
    add_output(extract);
    extract->callback([&] {
        std::optional<VertexId> root;
        if (!root_id.empty()) root = root_id;
        const auto witness = extract_witness_tree(load_graph(graph_path), root);
        emit(output_path, canonical_dump(witness_tree_to_json(witness)));
    });

    auto* verify = app.add_subcommand("verify-tree", "verify a witness tree against a graph");
    verify->add_option("graph", graph_path, "graph JSON file")->required();
    verify->add_option("tree", second_path, "witness tree JSON file")->required();
    add_output(verify);
    verify->callback([&] {
        const auto g = load_graph(graph_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_text_file(second_path));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        const auto witness = witness_tree_from_json(doc);
        const auto result = verify_witness(g, witness);
        nlohmann::json out{{"accepted", result.accepted},
                           {"failed_condition", result.accepted
                                                    ? nlohmann::json()
                                                    : nlohmann::json(result.failed_condition)}};
        emit(output_path, canonical_dump(out));
        exit_code = result.accepted ? 0 : 1;
    });

    auto make_setop = [&](const char* name, const char* help, bool take_union) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("g1", graph_path, "first graph JSON file")->required();
        sub->add_option("g2", second_path, "second graph JSON file")->required();
        sub->add_flag("--analyze", analyze, "also analyze both cores and overlap");
        add_output(sub);
        sub->callback([&, take_union] {
            const auto g1 = load_graph(graph_path);
            const auto g2 = load_graph(second_path);
            if (analyze) {
                const auto report = overlap_analysis(g1, g2);
                emit(output_path, canonical_dump(overlap_report_to_json(report)));
                const bool holds =
                    take_union ? report.union_star_convex : report.intersection_star_convex;
                exit_code = holds ? 0 : 1;
            } else {
                const auto result =
                    take_union ? graph_union(g1, g2) : graph_intersection(g1, g2);
                emit(output_path, serialize_graph(result));
            }
        });
    };
    make_setop("union", "id-based graph union", true);
    make_setop("intersect", "id-based graph intersection", false);

    auto* embed_cmd = app.add_subcommand("embed", "embed a convex-sequence class onto a spider");
    embed_cmd->add_option("class", graph_path, "class JSON file")->required();
    add_output(embed_cmd);
    embed_cmd->callback([&] {
        const auto c = parse_class(read_text_file(graph_path));
        try {
            const auto embedding = embed(c);
            nlohmann::json out{
                {"graph", graph_to_json(embedding.graph)},
                {"core", core_report_to_json(embedding.core_report)},
                {"spider",
                 {{"legs", embedding.spec.legs},
                  {"leg_length", embedding.spec.leg_length},
                  {"hub", embedding.spec.hub},
                  {"degenerate", embedding.spec.degenerate()}}}};
            emit(output_path, canonical_dump(out));
        } catch (const ClassValidationError& e) {
            emit(output_path, canonical_dump(class_report_to_json(e.report())));
            std::cerr << e.what() << "\n";
            exit_code = 1;
        }
    });

    auto* validate_cmd = app.add_subcommand("validate-class", "validate a convex-sequence class");
    validate_cmd->add_option("class", graph_path, "class JSON file")->required();
    add_output(validate_cmd);
    validate_cmd->callback([&] {
        const auto report = validate_class(parse_class(read_text_file(graph_path)));
        emit(output_path, canonical_dump(class_report_to_json(report)));
        exit_code = report.valid ? 0 : 1;
    });

    auto* oracle_cmd = app.add_subcommand("oracle", "compare the fast core against brute force");
    oracle_cmd->add_option("graph", graph_path, "graph JSON file")->required();
    add_output(oracle_cmd);
    oracle_cmd->callback([&] {
        const auto g = load_graph(graph_path);
        const auto brute = brute_core(g, oracle_bound_from_env());
        const auto fast = core(g).core;
        nlohmann::json out{{"agree", fast == brute},
                           {"fast", id_set_json(fast)},
                           {"brute", id_set_json(brute)}};
        emit(output_path, canonical_dump(out));
        exit_code = fast == brute ? 0 : 1;
    });

    auto* fuzz_cmd = app.add_subcommand("fuzz", "run a seeded property campaign");
    fuzz_cmd->add_option("--props", props_text,
                         "comma-separated properties or 'all' (default all)");
    fuzz_cmd->add_option("--seeds", seeds_text, "seed range A..B inclusive, or one seed");
    add_output(fuzz_cmd);
    fuzz_cmd->callback([&] {
        const auto props = parse_props(props_text);
        const auto [first, last] = parse_seed_range(seeds_text);
        const auto findings = run_campaign(props, first, last);
        std::string lines;
        bool clean = true;
        for (const auto& finding : findings) {
            lines += finding_to_json(finding).dump() + "\n";
            if (finding.verdict != "PASS") clean = false;
        }
        emit(output_path, lines);
        exit_code = clean ? 0 : 1;
    });

    auto* dot_cmd = app.add_subcommand("export-dot", "render the graph as DOT");
    dot_cmd->add_option("graph", graph_path, "graph JSON file")->required();
    dot_cmd->add_flag("--annotate", annotate, "mark core vertices");
    add_output(dot_cmd);
    dot_cmd->callback([&] {
        const auto g = load_graph(graph_path);
        if (annotate) {
            const auto report = core(g);
            emit(output_path, export_dot(g, &report));
        } else {
            emit(output_path, export_dot(g));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
