#pragma once

#include <string>
#include <vector>

#include "dirham/digraph.hpp"
#include "dirham/errors.hpp"
#include "dirham/graph_io.hpp"
#include "dirham/mcc.hpp"

namespace dirham {

// Reduction from Multicolored Clique to Hamiltonian Cycle parameterized by a
// directed feedback vertex set of size k(k-1) + 2k + k(k-1)/2.
//
// For each class i the gadget has a path P^i made of one block per class
// vertex v (in ascending id order). A block has 2k vertices:
//   left, (out_j, in_j) for every partner class j != i ascending, right.
// Each ordered pair i != j gets a choice cycle C^{i->j} with vertices
//   c_out(v_0), c_in(v_0), c_out(v_1), c_in(v_1), ...
// wired as c_out(v) -> out_j(v) and in_j(v) -> c_in(v). Universal vertices
// u^i hang off every block's left/right ends, terminals s^i/t^i close P^i,
// and s_hat/t_hat^{i->j} (i < j) enter at in_j(v), v in V^i, and leave from
// out_i(w), w in V^j. All terminals t -> s are joined, and every source edge
// vw (v in V^i, w in V^j, i < j) becomes out_j(v) -> in_i(w).
//
// Class indices are 0-based throughout; "pos" is a vertex's index within its
// class.
class GadgetLayout {
public:
    explicit GadgetLayout(const std::vector<int>& class_sizes);

    int k() const { return k_; }
    int class_size(int i) const { return sizes_[i]; }
    int block_size() const { return 2 * k_; }
    int vertex_count() const { return total_; }

    Vertex left(int i, int pos) const { return block_base(i, pos); }
    Vertex right(int i, int pos) const { return block_base(i, pos) + 2 * k_ - 1; }
    Vertex port_out(int i, int pos, int j) const { return block_base(i, pos) + 1 + 2 * partner_index(i, j); }
    Vertex port_in(int i, int pos, int j) const { return port_out(i, pos, j) + 1; }
    Vertex path_first(int i) const { return left(i, 0); }
    Vertex path_last(int i) const { return right(i, sizes_[i] - 1); }

    Vertex cycle_out(int i, int j, int pos) const { return cycle_base_[i][j] + 2 * pos; }
    Vertex cycle_in(int i, int j, int pos) const { return cycle_base_[i][j] + 2 * pos + 1; }

    Vertex universal(int i) const { return universal_base_ + i; }
    Vertex s(int i) const { return s_base_ + i; }
    Vertex t(int i) const { return t_base_ + i; }
    Vertex s_hat(int i, int j) const { return s_hat_base_ + pair_index(i, j); }
    Vertex t_hat(int i, int j) const { return t_hat_base_ + pair_index(i, j); }

    // Class whose path P^i contains v, or -1.
    int path_class(Vertex v) const;
    // Vertices [first, last] of the block of the pos-th vertex of class i.
    std::pair<Vertex, Vertex> block_range(int i, int pos) const {
        return {block_base(i, pos), block_base(i, pos) + 2 * k_ - 1};
    }

private:
    Vertex block_base(int i, int pos) const { return path_base_[i] + pos * 2 * k_; }
    int partner_index(int i, int j) const { return j < i ? j : j - 1; }
    int pair_index(int i, int j) const;

    int k_;
    std::vector<int> sizes_;
    std::vector<Vertex> path_base_;
    std::vector<std::vector<Vertex>> cycle_base_;
    Vertex universal_base_ = 0, s_base_ = 0, t_base_ = 0, s_hat_base_ = 0, t_hat_base_ = 0;
    int total_ = 0;
};

enum class GadgetRoleKind {
    path_left,
    path_right,
    path_out,
    path_in,
    universal,
    cycle_out,
    cycle_in,
    source,
    sink,
    source_hat,
    sink_hat,
};

struct GadgetRole {
    GadgetRoleKind kind;
    int i = -1;      // owning class
    int j = -1;      // partner class
    Vertex v = -1;   // source vertex of the block or cycle position

    // e.g. "path-out(i=0,j=2,v=1)", "universal(i=1)", "Shat(i=0,j=1)".
    std::string to_string() const;
};

struct GadgetGraph {
    MccInstance source;
    GadgetLayout layout;
    Digraph graph;
    std::vector<Vertex> dfvs;  // sorted
    std::vector<GadgetRole> roles;
};

int gadget_dfvs_size(int k);
int gadget_vertex_count(const std::vector<int>& class_sizes);

// Requires k >= 2 (std::invalid_argument otherwise). Asserts the DFVS size
// and acyclicity of graph - dfvs before returning.
GadgetGraph build_gadget(const MccInstance& inst);

// Z^0, Q^{0->1}, ..., Q^{0->k-1}, Z^1, Q^{1->2}, ..., Z^{k-1}, closed through
// the terminal edges. Throws std::invalid_argument for a non-clique.
CycleWitness clique_to_hamcycle(const GadgetGraph& gg, const CliqueWitness& w);

// Reads v_i off the unique pair of boundary edges of each C^{i->j}. Throws
// std::invalid_argument for an invalid Hamiltonian cycle and
// StructuralViolation if the cycle does not select one block per class or
// the selection is not a clique.
CliqueWitness hamcycle_to_clique(const GadgetGraph& gg, const CycleWitness& h);

struct LemmaOutcome {
    std::string lemma;
    int i = -1;
    int j = -1;
    bool passed = false;
    std::string detail;
};

struct LemmaReport {
    bool applicable = false;
    std::string rejection;
    std::vector<LemmaOutcome> outcomes;

    bool all_passed() const;
    const LemmaOutcome* first_failure() const;
};

// Predicates checked against a Hamiltonian cycle h:
//   boundary-pairs   (i,j): E(h) on the boundary of C^{i->j} is a union of
//                           {e_out(v), e_in(v)} pairs
//   uniform-entry    (i):   each block uses all or none of its cycle edges
//   single-block     (i):   exactly one block of P^i is used
//   unused-port-arc  (i,j): out_j(v_i) -> in_j(v_i) is not on h
//   cross-path-arcs  (i<j): at most one edge of h joins P^i and P^j
//   adjacency-arc    (i<j): that edge is out_j(v_i) -> in_i(v_j)
// A witness that is not a Hamiltonian cycle yields applicable == false.
LemmaReport check_structural_lemmas(const GadgetGraph& gg, const CycleWitness& h);

// {"k", "classes", "graph", "dfvs", "roles"}
json to_json(const GadgetGraph& gg);
std::string gadget_to_dot(const GadgetGraph& gg, const CycleWitness* overlay = nullptr);

}  // namespace dirham
