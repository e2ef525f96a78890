#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dirham/digraph.hpp"
#include "dirham/mcc.hpp"

namespace dirham {

struct SolverBudget {
    // Subset DP is used up to this many vertices (memory ~ 4 * 2^n bytes).
    int max_bitmask_vertices = 24;
    // Search-tree expansions for the backtracking solvers.
    std::uint64_t node_limit = 50'000'000;
    std::chrono::milliseconds time_limit{std::chrono::minutes(5)};

    // Throws std::invalid_argument unless every field is positive and the
    // bitmask threshold is at most 28.
    void validate() const;
};

enum class SolveStatus { yes, no, budget_exceeded };

std::string_view to_string(SolveStatus s);

// A budget overrun is its own outcome and never reads as "no".
template <class W>
struct SolveResult {
    SolveStatus status = SolveStatus::no;
    std::optional<W> witness;
    std::uint64_t nodes = 0;

    bool yes() const { return status == SolveStatus::yes; }
    bool no() const { return status == SolveStatus::no; }
    bool exceeded() const { return status == SolveStatus::budget_exceeded; }
};

// Dispatch on size: subset DP up to max_bitmask_vertices, backtracking above.
// The DP returns the lexicographically least cycle starting at vertex 0.
SolveResult<CycleWitness> hamiltonian_cycle(const Digraph& g, const SolverBudget& b = {});
SolveResult<CycleWitness> hamiltonian_cycle_bitmask(const Digraph& g, const SolverBudget& b = {});
SolveResult<CycleWitness> hamiltonian_cycle_backtrack(const Digraph& g, const SolverBudget& b = {});

SolveResult<PathWitness> hamiltonian_path(const Digraph& g, const SolverBudget& b = {});
SolveResult<PathWitness> hamiltonian_path_bitmask(const Digraph& g, const SolverBudget& b = {});
SolveResult<PathWitness> hamiltonian_path_backtrack(const Digraph& g, const SolverBudget& b = {});

// Maximum-length simple path / cycle. Subset DP up to the bitmask threshold,
// branch and bound beyond it. "no" only when the graph has no vertex (path)
// or no cycle at all.
SolveResult<PathWitness> longest_path_exact(const Digraph& g, const SolverBudget& b = {});
SolveResult<CycleWitness> longest_cycle_exact(const Digraph& g, const SolverBudget& b = {});

// Lexicographic scan over the product of the classes; node_limit bounds the
// number of partial selections examined.
SolveResult<CliqueWitness> multicolored_clique_exact(const MccInstance& inst, const SolverBudget& b = {});

// Longest path of a DAG by DP over a topological order. Throws
// std::invalid_argument on cyclic input.
PathWitness dag_longest_path(const Digraph& g);

}  // namespace dirham
