#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dirham {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple directed graph on the dense vertex range [0, n).
//
// Adjacency is kept in CSR form in both directions and every neighbor list is
// sorted ascending, so iteration order is deterministic. Values are immutable
// once constructed; build them through the constructor or DigraphBuilder.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int vertex_count);

    // Throws std::invalid_argument on self-loops, duplicate edges or endpoints
    // outside [0, vertex_count).
    Digraph(int vertex_count, std::span<const Edge> edges,
            std::map<Vertex, std::string> labels = {});

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return out_targets_.size(); }
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    std::span<const Vertex> out_neighbors(Vertex v) const;
    std::span<const Vertex> in_neighbors(Vertex v) const;
    int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const;

    // Edges in lexicographic (tail, head) order.
    std::vector<Edge> edges() const;

    const std::map<Vertex, std::string>& labels() const { return labels_; }
    std::optional<std::string_view> label(Vertex v) const;

    friend bool operator==(const Digraph& a, const Digraph& b);

private:
    int n_ = 0;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Vertex> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Vertex> in_sources_;
    std::map<Vertex, std::string> labels_;
};

// Incremental construction helper used by the reductions. Vertex ids are
// handed out in creation order.
class DigraphBuilder {
public:
    DigraphBuilder() = default;
    explicit DigraphBuilder(int initial_vertices) : n_(initial_vertices) {}

    Vertex add_vertex();
    Vertex add_vertex(std::string label);
    void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
    void set_label(Vertex v, std::string label) { labels_[v] = std::move(label); }
    int vertex_count() const { return n_; }

    Digraph build() const { return Digraph(n_, edges_, labels_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<Vertex, std::string> labels_;
};

struct CycleWitness {
    std::vector<Vertex> vertices;
    std::size_t length() const { return vertices.size(); }
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct PathWitness {
    std::vector<Vertex> vertices;
    // Number of edges.
    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

enum class WitnessError {
    none,
    empty,
    too_short,
    vertex_out_of_range,
    repeated_vertex,
    missing_edge,
    not_hamiltonian,
};

std::string_view to_string(WitnessError e);

struct WitnessCheck {
    WitnessError error = WitnessError::none;
    // Position in the witness where the check failed, when meaningful.
    std::size_t position = 0;

    bool ok() const { return error == WitnessError::none; }
    explicit operator bool() const { return ok(); }
};

WitnessCheck validate_witness(const Digraph& g, const CycleWitness& w, bool hamiltonian);
WitnessCheck validate_witness(const Digraph& g, const PathWitness& w, bool hamiltonian);

// Rotation of a cycle that starts at its smallest vertex id.
CycleWitness normalize_cycle(const CycleWitness& w);

std::optional<std::vector<Vertex>> topological_order(const Digraph& g);
bool is_acyclic(const Digraph& g);

// Acyclicity of g with the flagged vertices deleted.
bool is_acyclic_without(const Digraph& g, std::span<const char> removed);

bool verify_dfvs(const Digraph& g, std::span<const Vertex> dfvs);

// A minimum directed feedback vertex set if its size is at most `budget`.
// Bounded-depth branching on the vertices of a shortest remaining cycle,
// with iterative deepening on the solution size.
std::optional<std::vector<Vertex>> find_min_dfvs(const Digraph& g, int budget);

// Shortest directed cycle avoiding the flagged vertices (empty span: none
// removed). Ties go to the cycle found from the smallest start vertex.
std::optional<CycleWitness> shortest_cycle(const Digraph& g, std::span<const char> removed = {});

std::optional<int> girth(const Digraph& g);

// Components ordered by smallest member, members ascending.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g,
                                                              std::span<const char> removed);

struct EdgeSubdivision {
    Digraph graph;
    Vertex new_vertex;
};

// Replaces (u, v) by (u, w), (w, v) where w = g.vertex_count().
EdgeSubdivision subdivide_edge(const Digraph& g, Edge e);

// Per-vertex successor along a cycle witness; -1 for vertices not on it.
std::vector<Vertex> cycle_successors(int vertex_count, const CycleWitness& w);

}  // namespace dirham
