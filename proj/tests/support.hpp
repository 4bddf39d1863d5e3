#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scg/graph.hpp"
#include "scg/graph_io.hpp"
#include "scg/rational.hpp"

namespace scgtest {

inline scg::Rational R(const std::string& text) {
    return scg::Rational::from_decimal(text);
}

// Graph literal: ids with decimal weight strings plus edge pairs.
inline scg::WeightedGraph make_graph(
    std::initializer_list<std::pair<std::string, std::string>> vertices,
    std::initializer_list<std::pair<std::string, std::string>> edges) {
    std::vector<std::pair<scg::VertexId, scg::Weight>> vs;
    for (const auto& [id, w] : vertices) vs.emplace_back(id, R(w));
    std::vector<std::pair<scg::VertexId, scg::VertexId>> es(edges.begin(), edges.end());
    return scg::WeightedGraph(std::move(vs), std::move(es));
}

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(SCG_FIXTURE_DIR) / name;
}

inline scg::WeightedGraph load_fixture(const std::string& name) {
    return scg::parse_graph(scg::read_text_file(fixture_path(name)));
}

struct CliResult {
    int exit_code = -1;
    std::string out; // stdout only; stderr goes to the null device
};

// Runs the installed CLI binary with the given argument string through the
// shell and captures stdout and the exit code. `env` is prepended verbatim
// ("NAME=value").
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command = (env.empty() ? "" : env + " ") +
                                std::string(SCG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
    CliResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = ::pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace scgtest
