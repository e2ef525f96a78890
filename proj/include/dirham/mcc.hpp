#pragma once

#include <vector>

#include "dirham/digraph.hpp"
#include "dirham/graph_io.hpp"

namespace dirham {

// One chosen vertex per color class, in class order.
struct CliqueWitness {
    std::vector<Vertex> vertices;
    friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

// Multicolored Clique instance: an undirected graph (stored as a symmetric
// digraph) with an ordered partition of its vertices into k color classes.
// Each class is kept in ascending id order, which is the order the gadget
// construction lays its blocks out in.
class MccInstance {
public:
    // Edges of `graph` are read as undirected and symmetric-closed. Throws
    // std::invalid_argument unless the classes are nonempty, disjoint and
    // cover every vertex.
    MccInstance(const Digraph& graph, std::vector<std::vector<Vertex>> classes);

    const Digraph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int k() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<Vertex>>& classes() const { return classes_; }
    const std::vector<Vertex>& color_class(int i) const { return classes_[i]; }

    int class_of(Vertex v) const { return class_of_[v]; }
    int position_in_class(Vertex v) const { return position_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return graph_.has_edge(u, v); }

private:
    Digraph graph_;
    std::vector<std::vector<Vertex>> classes_;
    std::vector<int> class_of_;
    std::vector<int> position_;
};

bool is_multicolored_clique(const MccInstance& inst, const CliqueWitness& w);

// {"n": int, "edges": [[u, v], ...], "classes": [[ids], ...]}; each
// undirected edge is written once as [min, max].
json to_json(const MccInstance& inst);
MccInstance mcc_from_json(const json& j);

json to_json(const CliqueWitness& w);

}  // namespace dirham
