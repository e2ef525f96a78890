#include "dirham/graph_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dirham {

json to_json(const Digraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    json j = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, text] : g.labels()) labels[std::to_string(v)] = text;
        j["labels"] = std::move(labels);
    }
    return j;
}

Digraph digraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a [u, v] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::map<Vertex, std::string> labels;
    if (j.contains("labels")) {
        for (const auto& [key, value] : j.at("labels").items()) {
            std::size_t used = 0;
            const int v = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument("label key is not a vertex id: " + key);
            labels[v] = value.get<std::string>();
        }
    }
    return Digraph(n, edges, std::move(labels));
}

json to_json(const CycleWitness& w) { return {{"kind", "cycle"}, {"vertices", w.vertices}}; }

json to_json(const PathWitness& w) { return {{"kind", "path"}, {"vertices", w.vertices}}; }

std::vector<Vertex> witness_vertices_from_json(const json& j) {
    if (j.is_array()) return j.get<std::vector<Vertex>>();
    if (j.is_object() && j.contains("vertices")) return j.at("vertices").get<std::vector<Vertex>>();
    if (j.is_object() && j.contains("witness")) return witness_vertices_from_json(j.at("witness"));
    throw std::invalid_argument("witness JSON needs a vertex array");
}

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_dot(const Digraph& g, const DotStyle& style) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(style.name) << "\" {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [";
        auto text = g.label(v);
        if (auto it = style.labels.find(v); it != style.labels.end()) text = it->second;
        if (text) out << "label=\"" << v << "\\n" << dot_escape(*text) << "\"";
        else out << "label=\"" << v << "\"";
        const bool hi = style.highlighted.contains(v);
        auto fill = style.fill_colors.find(v);
        if (hi) out << ", shape=box, penwidth=2";
        if (fill != style.fill_colors.end()) out << ", style=filled, fillcolor=\"" << fill->second << "\"";
        else if (hi) out << ", style=filled, fillcolor=\"gray80\"";
        out << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  " << e.first << " -> " << e.second;
        if (style.marked_edges.contains(e)) out << " [color=red, penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::set<Edge> witness_edges(const CycleWitness& w) {
    std::set<Edge> out;
    const auto& s = w.vertices;
    for (std::size_t i = 0; i < s.size(); ++i) out.emplace(s[i], s[(i + 1) % s.size()]);
    return out;
}

std::set<Edge> witness_edges(const PathWitness& w) {
    std::set<Edge> out;
    const auto& s = w.vertices;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) out.emplace(s[i], s[i + 1]);
    return out;
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace dirham
