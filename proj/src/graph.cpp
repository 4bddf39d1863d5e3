#include "scg/graph.hpp"

#include <algorithm>

#include "scg/errors.hpp"

namespace scg {

WeightedGraph::WeightedGraph(std::vector<std::pair<VertexId, Weight>> vertices,
                             std::vector<std::pair<VertexId, VertexId>> edges) {
    std::sort(vertices.begin(), vertices.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (vertices[i].first == vertices[i + 1].first) {
            throw DomainError("duplicate vertex id '" + vertices[i].first + "'");
        }
    }

    names_.reserve(vertices.size());
    weights_.reserve(vertices.size());
    for (auto& [id, w] : vertices) {
        if (id.empty()) throw DomainError("empty vertex id");
        if (w.is_negative()) {
            throw DomainError("negative weight '" + w.to_decimal_string() +
                              "' for vertex '" + id + "'");
        }
        names_.push_back(std::move(id));
        weights_.push_back(std::move(w));
    }
    adj_.assign(names_.size(), {});

    edges_.reserve(edges.size());
    for (const auto& [x, y] : edges) {
        if (x == y) throw DomainError("self-loop on vertex '" + x + "'");
        const auto xi = static_cast<std::uint32_t>(index_of(x));
        const auto yi = static_cast<std::uint32_t>(index_of(y));
        edges_.emplace_back(std::min(xi, yi), std::max(xi, yi));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
        if (edges_[i] == edges_[i + 1]) {
            throw DomainError("duplicate edge ('" + names_[edges_[i].first] + "','" +
                              names_[edges_[i].second] + "')");
        }
    }

    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool WeightedGraph::contains(const VertexId& v) const noexcept {
    return std::binary_search(names_.begin(), names_.end(), v);
}

std::size_t WeightedGraph::index_of(const VertexId& v) const {
    const auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) {
        throw DomainError("unknown vertex '" + v + "'");
    }
    return static_cast<std::size_t>(it - names_.begin());
}

const Weight& WeightedGraph::weight(const VertexId& v) const {
    return weights_[index_of(v)];
}

std::size_t WeightedGraph::degree(const VertexId& v) const {
    return adj_[index_of(v)].size();
}

std::vector<VertexId> WeightedGraph::neighbors(const VertexId& v) const {
    std::vector<VertexId> out;
    for (const auto i : adj_[index_of(v)]) out.push_back(names_[i]);
    return out;
}

bool WeightedGraph::has_edge(const VertexId& x, const VertexId& y) const {
    const auto xi = static_cast<std::uint32_t>(index_of(x));
    const auto yi = static_cast<std::uint32_t>(index_of(y));
    const auto e = std::make_pair(std::min(xi, yi), std::max(xi, yi));
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::pair<VertexId, VertexId>> WeightedGraph::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (const auto& [a, b] : edges_) out.emplace_back(names_[a], names_[b]);
    return out;
}

std::set<VertexId> leaves(const WeightedGraph& g) {
    std::set<VertexId> out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (g.adjacent(i).size() == 1) out.insert(g.name(i));
    }
    return out;
}

namespace {

std::size_t count_components(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::size_t components = 0;
    std::vector<std::uint32_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(static_cast<std::uint32_t>(s));
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (const auto w : g.adjacent(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

} // namespace

ValidationReport validate(const WeightedGraph& g) {
    ValidationReport report;
    report.component_count = count_components(g);
    report.connected = report.component_count <= 1;
    report.leaves = leaves(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        report.degrees[g.name(i)] = g.adjacent(i).size();
    }
    return report;
}

bool is_connected(const WeightedGraph& g) {
    return count_components(g) <= 1;
}

bool is_tree(const WeightedGraph& g) {
    return g.vertex_count() > 0 && is_connected(g) &&
           g.edge_count() == g.vertex_count() - 1;
}

bool is_subgraph(const WeightedGraph& sub, const WeightedGraph& super) {
    for (std::size_t i = 0; i < sub.vertex_count(); ++i) {
        const auto& id = sub.name(i);
        if (!super.contains(id)) return false;
        if (!(super.weight(id) == sub.weight_at(i))) return false;
    }
    for (const auto& [a, b] : sub.edge_list()) {
        if (!super.has_edge(a, b)) return false;
    }
    return true;
}

} // namespace scg
