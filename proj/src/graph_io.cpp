#include "scg/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "scg/errors.hpp"

namespace scg {

namespace {

Weight parse_weight(const nlohmann::json& value) {
    if (value.is_string()) return Rational::from_decimal(value.get<std::string>());
    if (value.is_number_integer()) {
        return Rational::from_integer(value.get<long long>());
    }
    throw ParseError("weight must be a decimal string or integer, got '" +
                     value.dump() + "'");
}

} // namespace

WeightedGraph graph_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ParseError("graph document must be a JSON object, got '" +
                         doc.dump().substr(0, 40) + "'");
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw ParseError("graph document needs a 'vertices' array");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("graph document needs an 'edges' array");
    }

    std::vector<std::pair<VertexId, Weight>> vertices;
    for (const auto& entry : doc["vertices"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry.contains("w")) {
            throw ParseError("vertex entry must be {\"id\",\"w\"}, got '" +
                             entry.dump() + "'");
        }
        if (!entry["id"].is_string()) {
            throw ParseError("vertex id must be a string, got '" +
                             entry["id"].dump() + "'");
        }
        vertices.emplace_back(entry["id"].get<std::string>(), parse_weight(entry["w"]));
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string()) {
            throw ParseError("edge entry must be a pair of ids, got '" +
                             entry.dump() + "'");
        }
        edges.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

WeightedGraph parse_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

nlohmann::json graph_to_json(const WeightedGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& id : g.vertex_ids()) {
        vertices.push_back({{"id", id}, {"w", g.weight(id).to_decimal_string()}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edge_list()) {
        edges.push_back(nlohmann::json::array({a, b}));
    }
    return nlohmann::json{{"edges", std::move(edges)}, {"vertices", std::move(vertices)}};
}

std::string serialize_graph(const WeightedGraph& g) {
    return canonical_dump(graph_to_json(g));
}

std::string export_dot(const WeightedGraph& g, const CoreReport* annotations) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& id : g.vertex_ids()) {
        out << "  \"" << id << "\" [label=\"" << id << ":"
            << g.weight(id).to_decimal_string() << "\"";
        if (annotations != nullptr && annotations->core.contains(id)) {
            out << ", style=filled, fillcolor=gold";
        }
        out << "];\n";
    }
    for (const auto& [a, b] : g.edge_list()) {
        out << "  \"" << a << "\" -- \"" << b << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + path.string() + "'");
    out << text;
}

std::string canonical_dump(const nlohmann::json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace scg
