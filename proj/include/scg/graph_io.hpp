#pragma once

#include <filesystem>
#include <string>

#include "scg/graph.hpp"
#include "scg/star_convexity.hpp"

#include "json.hpp"

namespace scg {

// Graph document: {"vertices":[{"id":...,"w":...}...],"edges":[[a,b]...]}.
// Weights are decimal strings or JSON integers; floating-point numbers are
// rejected so no weight ever passes through a double.
WeightedGraph graph_from_json(const nlohmann::json& doc);
WeightedGraph parse_graph(const std::string& text);

// Canonical document: sorted vertices and normalized, sorted edges, weights
// as minimal decimal strings. parse_graph(serialize_graph(g)) == g.
nlohmann::json graph_to_json(const WeightedGraph& g);
std::string serialize_graph(const WeightedGraph& g);

// DOT text with label="<id>:<w>" per node; when a report is given, core
// vertices are additionally filled.
std::string export_dot(const WeightedGraph& g, const CoreReport* annotations = nullptr);

// Whole-file helpers used by the CLI and the test harness. Read failures
// surface as ParseError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Canonical rendering shared by every CLI output: two-space indent, sorted
// object keys (nlohmann::json object keys are already sorted), trailing
// newline.
std::string canonical_dump(const nlohmann::json& doc);

} // namespace scg
