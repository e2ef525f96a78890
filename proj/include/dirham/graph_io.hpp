#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirham/digraph.hpp"

namespace dirham {

using json = nlohmann::json;

// {"n": int, "edges": [[u, v], ...], "labels": {"id": "text", ...}}
// Edges are written in sorted order; "labels" is omitted when empty.
json to_json(const Digraph& g);
Digraph digraph_from_json(const json& j);

json to_json(const CycleWitness& w);
json to_json(const PathWitness& w);
// Accepts either a bare array or {"vertices": [...]}.
std::vector<Vertex> witness_vertices_from_json(const json& j);

struct DotStyle {
    std::string name = "G";
    std::set<Vertex> highlighted;              // drawn as filled boxes (e.g. a DFVS)
    std::set<Edge> marked_edges;               // drawn bold red (e.g. a witness)
    std::map<Vertex, std::string> fill_colors; // per-vertex fill
    std::map<Vertex, std::string> labels;      // overrides the graph's own labels
};

std::string to_dot(const Digraph& g, const DotStyle& style = {});

// Edges traversed by a witness, as used by DotStyle::marked_edges.
std::set<Edge> witness_edges(const CycleWitness& w);
std::set<Edge> witness_edges(const PathWitness& w);

// 64-bit FNV-1a over the bytes, rendered as 16 lowercase hex digits.
std::string content_digest(const std::string& bytes);

}  // namespace dirham
