#pragma once

#include <string>
#include <vector>

#include "dirham/digraph.hpp"
#include "dirham/graph_io.hpp"

namespace dirham {

// Arborescence on nodes 0..t-1 with bags beta and guards gamma. The tree
// edge into node c (from parent[c]) carries gamma[c]; gamma[root] is unused.
struct DirectedTreeDecomposition {
    int root = 0;
    std::vector<int> parent;                   // -1 for the root
    std::vector<std::vector<Vertex>> beta;
    std::vector<std::vector<Vertex>> gamma;

    int node_count() const { return static_cast<int>(parent.size()); }
};

struct DtdReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks the tree shape, that the bags partition V(g), and that for every
// tree edge (p, c) no strongly connected component of g - gamma[c] with an
// edge meets both beta(subtree of c) and the rest.
DtdReport verify_dtd(const Digraph& g, const DirectedTreeDecomposition& d);

// max_t |Gamma(t)| - 1, Gamma(t) = beta(t) plus the guards of all incident
// tree edges. Throws std::invalid_argument if the tree shape is malformed.
int dtd_width(const DirectedTreeDecomposition& d);
// As above, but first requires verify_dtd(g, d) to pass.
int dtd_width(const Digraph& g, const DirectedTreeDecomposition& d);

// Width-0 decomposition of a DAG: a path of singleton bags in topological
// order with empty guards. Throws std::invalid_argument on cyclic input.
DirectedTreeDecomposition dag_decomposition(const Digraph& g);

// {"nodes": [ids], "parent": {"c": p}, "root": r, "beta": {"t": [v...]},
//  "gamma": {"p->c": [v...]}}. Node ids in JSON may be any integers; they
// are renumbered by their position in "nodes".
json to_json(const DirectedTreeDecomposition& d);
DirectedTreeDecomposition dtd_from_json(const json& j);

}  // namespace dirham
