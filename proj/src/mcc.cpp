#include "dirham/mcc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dirham {

namespace {

Digraph symmetric_closure(const Digraph& g) {
    std::set<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace(u, v);
        edges.emplace(v, u);
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return Digraph(g.vertex_count(), list, g.labels());
}

}  // namespace

MccInstance::MccInstance(const Digraph& graph, std::vector<std::vector<Vertex>> classes)
    : graph_(symmetric_closure(graph)), classes_(std::move(classes)) {
    const int n = graph_.vertex_count();
    class_of_.assign(static_cast<std::size_t>(n), -1);
    position_.assign(static_cast<std::size_t>(n), -1);
    if (classes_.empty()) throw std::invalid_argument("multicolored clique needs at least one class");
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        auto& cls = classes_[i];
        if (cls.empty()) throw std::invalid_argument("color class " + std::to_string(i) + " is empty");
        std::sort(cls.begin(), cls.end());
        for (std::size_t p = 0; p < cls.size(); ++p) {
            const Vertex v = cls[p];
            if (v < 0 || v >= n) throw std::invalid_argument("class member out of range");
            if (class_of_[v] >= 0) throw std::invalid_argument("vertex " + std::to_string(v) + " in two classes");
            class_of_[v] = static_cast<int>(i);
            position_[v] = static_cast<int>(p);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (class_of_[v] < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " has no class");
}

bool is_multicolored_clique(const MccInstance& inst, const CliqueWitness& w) {
    if (static_cast<int>(w.vertices.size()) != inst.k()) return false;
    for (int i = 0; i < inst.k(); ++i) {
        const Vertex v = w.vertices[i];
        if (v < 0 || v >= inst.vertex_count() || inst.class_of(v) != i) return false;
    }
    for (int i = 0; i < inst.k(); ++i)
        for (int j = i + 1; j < inst.k(); ++j)
            if (!inst.adjacent(w.vertices[i], w.vertices[j])) return false;
    return true;
}

json to_json(const MccInstance& inst) {
    json edges = json::array();
    for (const auto& [u, v] : inst.graph().edges())
        if (u < v) edges.push_back({u, v});
    return {{"n", inst.vertex_count()}, {"edges", std::move(edges)}, {"classes", inst.classes()}};
}

MccInstance mcc_from_json(const json& j) {
    if (!j.contains("classes")) throw std::invalid_argument("MCC JSON needs \"classes\"");
    // Undirected input may list both orientations of an edge.
    json g = {{"n", j.at("n")}, {"edges", json::array()}};
    std::set<Edge> seen;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a [u, v] pair");
        Vertex u = e[0].get<int>(), v = e[1].get<int>();
        if (u > v) std::swap(u, v);
        if (seen.emplace(u, v).second) g["edges"].push_back({u, v});
    }
    return MccInstance(digraph_from_json(g), j.at("classes").get<std::vector<std::vector<Vertex>>>());
}

json to_json(const CliqueWitness& w) { return {{"kind", "clique"}, {"vertices", w.vertices}}; }

}  // namespace dirham
