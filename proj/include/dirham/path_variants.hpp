#pragma once

#include <vector>

#include "dirham/digraph.hpp"
#include "dirham/girth_reduction.hpp"
#include "dirham/graph_io.hpp"

namespace dirham {

// G^v: v is split into v_out (keeps id v, inherits the out-edges) and v_in
// (new id n, inherits the in-edges). `tail` lists vertices appended after
// v_in by build_longest_path_above_girth_instance.
struct SplitVertexMap {
    Vertex removed;
    Vertex v_in;
    Vertex v_out;
    std::vector<Vertex> tail;
};

struct PathInstance {
    Digraph graph;
    SplitVertexMap split;
};

// Throws std::invalid_argument if v is not a vertex of g.
PathInstance cycle_to_path_instance(const Digraph& g, Vertex v);

// Hamiltonian cycle of g -> Hamiltonian path of G^v from v_out to v_in.
PathWitness lift_cycle_to_path(const PathInstance& pi, const Digraph& g, const CycleWitness& h);
// Drops v_in (and any tail) and closes the path through v. Throws
// std::invalid_argument unless p is a Hamiltonian path of pi.graph.
CycleWitness project_path_to_cycle(const PathInstance& pi, const PathWitness& p);

// Longest Path Above Girth instance: G'^v for a vertex v outside the DFVS of
// G' plus a path on n - 1 vertices hanging off v_in.
struct LongPathGirthInstance {
    GirthInstance girth_instance;
    PathInstance path;
    int multiplier = 0;  // k + 2
    int girth = 0;       // n

    // A Hamiltonian path has n(k+2) - 1 edges; that is the threshold.
    long long required_path_length() const {
        return static_cast<long long>(girth) * multiplier - 1;
    }
};

// v is the smallest source vertex outside X; if X covers the source, the
// first internal vertex of the special splice path. Asserts n(k+2) vertices
// and girth n.
LongPathGirthInstance build_longest_path_above_girth_instance(const GirthInstance& gi);

PathWitness lift_to_long_path(const LongPathGirthInstance& lp, const CycleWitness& girth_cycle);
// Takes a path of length required_path_length() back to a Hamiltonian
// cycle of the girth instance.
CycleWitness project_long_path(const LongPathGirthInstance& lp, const PathWitness& p);

json to_json(const SplitVertexMap& m);
json to_json(const LongPathGirthInstance& lp);

// Each v in S becomes v_in (keeps id v, in-edges) -> v_out (appended in
// ascending order of S, out-edges).
struct DfasInstance {
    Digraph graph;
    std::vector<Vertex> split;     // S, sorted
    std::vector<Vertex> v_out;     // v_out[a] pairs with split[a]
    std::vector<Edge> arcs;        // the (v_in, v_out) arcs
};

DfasInstance dfvs_to_dfas(const Digraph& g, std::vector<Vertex> s);
CycleWitness lift_cycle_to_dfas(const DfasInstance& d, const CycleWitness& h);
CycleWitness project_cycle_from_dfas(const DfasInstance& d, int source_vertex_count, const CycleWitness& h);
json to_json(const DfasInstance& d);

// Instance for vertex v: v is replaced by a path of length g - k (the start
// keeps id v and takes the in-edges, the end takes the out-edges; new ids
// appended), and a disjoint cycle of length g is added.
struct AdditiveInstance {
    Digraph graph;
    Vertex vertex;
    std::vector<Vertex> path;   // v, ..., path end
    std::vector<Vertex> cycle;  // the pinning g-cycle
    int girth = 0;
    int multiplier = 2;

    long long required_path_length() const { return 2LL * girth; }
};

// Throws std::invalid_argument unless g has a cycle and 0 < k < girth(g).
std::vector<AdditiveInstance> build_additive_instances(const Digraph& g, int k);

// A path of g through `vertex` of length >= g + k maps to one of length
// >= 2g, and back.
PathWitness lift_additive_path(const AdditiveInstance& ai, const PathWitness& p);
PathWitness project_additive_path(const AdditiveInstance& ai, int source_vertex_count, const PathWitness& p);
json to_json(const AdditiveInstance& ai);

}  // namespace dirham
