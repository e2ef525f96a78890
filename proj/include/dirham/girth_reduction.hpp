#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dirham/digraph.hpp"
#include "dirham/graph_io.hpp"
#include "dirham/oracles.hpp"

namespace dirham {

// A digraph together with a directed feedback vertex set X (sorted) and the
// designated member `special` that receives the longer splice path.
class DfvsInstance {
public:
    // Throws std::invalid_argument if X has fewer than two vertices, contains
    // an invalid or repeated id, graph - X has a cycle, or `special` is given
    // and not in X. `special` defaults to min(X).
    DfvsInstance(Digraph graph, std::vector<Vertex> dfvs, std::optional<Vertex> special = std::nullopt);

    const Digraph& graph() const { return graph_; }
    const std::vector<Vertex>& dfvs() const { return dfvs_; }
    Vertex special() const { return special_; }
    int n() const { return graph_.vertex_count(); }
    int k() const { return static_cast<int>(dfvs_.size()); }
    bool in_dfvs(Vertex v) const { return std::binary_search(dfvs_.begin(), dfvs_.end(), v); }

private:
    Digraph graph_;
    std::vector<Vertex> dfvs_;
    Vertex special_ = -1;
};

// {"graph": {...}, "dfvs": [...], "special": x}
json to_json(const DfvsInstance& inst);
DfvsInstance dfvs_instance_from_json(const json& j);

// v in X is replaced by v_in -> ... -> v_out plus the edge v_out -> v_in.
// `path` lists every vertex from v_in to v_out inclusive.
struct SplicePath {
    Vertex original;
    Vertex v_in;
    Vertex v_out;
    std::vector<Vertex> path;
    int length() const { return static_cast<int>(path.size()) - 1; }
};

// Layout: every source vertex keeps its id (for v in X that id is v_in); for
// each v in X in ascending order the internal path vertices and then v_out
// are appended.
struct GirthInstance {
    DfvsInstance source;
    Digraph graph;
    int target_multiplier = 0;          // k + 1
    std::vector<SplicePath> split_map;  // one entry per X vertex, ascending
    std::vector<int> split_index;       // source vertex -> split_map index or -1

    int girth() const { return source.n(); }
    long long required_cycle_length() const {
        return static_cast<long long>(girth()) * target_multiplier;
    }
};

// Asserts |V| = n(k+1) and measured girth = n (std::logic_error otherwise).
GirthInstance build_girth_instance(const DfvsInstance& inst);

CycleWitness lift_hamcycle(const GirthInstance& gi, const CycleWitness& h);
// Throws std::invalid_argument for a non-Hamiltonian witness and
// StructuralViolation if a splice path is not traversed contiguously.
CycleWitness project_hamcycle(const GirthInstance& gi, const CycleWitness& h);

// {"source", "graph", "girth", "target_multiplier", "required_cycle_length",
//  "split_map": [{"v", "v_in", "v_out", "path"}]}
json to_json(const GirthInstance& gi);

// Hamiltonian cycle for a DFVS of size at most one, in polynomial time: with
// X = {x}, G - x must have a unique topological order that is a path, closed
// through x. Throws std::invalid_argument if |X| > 1 or X is not a DFVS.
std::optional<CycleWitness> hamcycle_small_dfvs(const Digraph& g, const std::vector<Vertex>& dfvs);

}  // namespace dirham
