#include "dirham/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dirham {

void SolverBudget::validate() const {
    if (max_bitmask_vertices <= 0 || max_bitmask_vertices > 28)
        throw std::invalid_argument("max_bitmask_vertices must be in [1, 28]");
    if (node_limit == 0) throw std::invalid_argument("node_limit must be positive");
    if (time_limit.count() <= 0) throw std::invalid_argument("time_limit must be positive");
}

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::yes: return "yes";
        case SolveStatus::no: return "no";
        case SolveStatus::budget_exceeded: return "budget";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

class Meter {
public:
    explicit Meter(const SolverBudget& b) : budget_(b), start_(Clock::now()) {}

    void tick() {
        if (++nodes_ > budget_.node_limit) throw BudgetExceeded{};
        if ((nodes_ & 1023U) == 0) check_time();
    }
    void check_time() const {
        if (Clock::now() - start_ > budget_.time_limit) throw BudgetExceeded{};
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    const SolverBudget& budget_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

template <class W>
SolveResult<W> make_yes(W w, std::uint64_t nodes) {
    return {SolveStatus::yes, std::move(w), nodes};
}
template <class W>
SolveResult<W> make_no(std::uint64_t nodes = 0) {
    return {SolveStatus::no, std::nullopt, nodes};
}
template <class W>
SolveResult<W> make_exceeded(std::uint64_t nodes) {
    return {SolveStatus::budget_exceeded, std::nullopt, nodes};
}

// Bit (v - offset) set for every out-neighbor v >= offset.
std::vector<std::uint32_t> neighbor_masks(const Digraph& g, bool outgoing, int offset) {
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = outgoing ? g.out_neighbors(v) : g.in_neighbors(v);
        for (Vertex w : nbrs)
            if (w >= offset) masks[v] |= 1U << (w - offset);
    }
    return masks;
}

inline int lowest_bit(std::uint32_t x) { return std::countr_zero(x); }

// reach[mask] has bit v iff some Hamiltonian path of `mask` starts at v.
std::vector<std::uint32_t> path_reach_table(const std::vector<std::uint32_t>& out, int n, Meter& meter) {
    const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
    std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
        if ((mask & 0xFFFFU) == 0) meter.check_time();
        std::uint32_t res = 0;
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            const int v = lowest_bit(bits);
            const std::uint32_t rest = mask & ~(1U << v);
            if (rest == 0 || (out[v] & reach[rest]) != 0) res |= 1U << v;
        }
        reach[mask] = res;
    }
    return reach;
}

// Greedy walk through a reach table: from `cur`, always step to the smallest
// vertex that still admits a completion.
void follow_reach(const std::vector<std::uint32_t>& out, const std::vector<std::uint32_t>& reach, int cur,
                  std::uint32_t rest, int offset, std::vector<Vertex>& seq) {
    while (rest != 0) {
        const std::uint32_t options = out[cur] & reach[rest];
        const int next = lowest_bit(options);
        seq.push_back(next + offset);
        rest &= ~(1U << next);
        cur = next + offset;
    }
}

// Backtracking Hamiltonian path/cycle search with forced-move propagation.
class HamSearch {
public:
    HamSearch(const Digraph& g, Meter& meter, bool cycle)
        : g_(g), meter_(meter), cycle_(cycle), n_(g.vertex_count()),
          visited_(static_cast<std::size_t>(n_), 0), succ_count_(static_cast<std::size_t>(n_), 0),
          pred_owner_(static_cast<std::size_t>(n_), 0), succ_owner_(static_cast<std::size_t>(n_), 0),
          seen_(static_cast<std::size_t>(n_), 0) {
        queue_.reserve(static_cast<std::size_t>(n_));
    }

    bool search(Vertex start) {
        std::fill(visited_.begin(), visited_.end(), 0);
        path_.assign(1, start);
        visited_[start] = 1;
        start_ = start;
        return extend();
    }

    const std::vector<Vertex>& path() const { return path_; }

private:
    bool extend() {
        const Vertex head = path_.back();
        if (static_cast<int>(path_.size()) == n_) return !cycle_ || g_.has_edge(head, start_);
        meter_.tick();
        Vertex forced = -1;
        if (!feasible(head, forced)) return false;

        std::vector<Vertex> candidates;
        if (forced >= 0) {
            candidates.push_back(forced);
        } else {
            for (Vertex w : g_.out_neighbors(head))
                if (!visited_[w]) candidates.push_back(w);
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](Vertex a, Vertex b) { return succ_count_[a] < succ_count_[b]; });
        }
        for (Vertex c : candidates) {
            visited_[c] = 1;
            path_.push_back(c);
            if (extend()) return true;
            path_.pop_back();
            visited_[c] = 0;
        }
        return false;
    }

    // Necessary conditions for the current prefix to extend to a Hamiltonian
    // path (ending next to start_ in cycle mode). Sets `forced` when exactly
    // one unvisited vertex can only be entered from the head.
    bool feasible(Vertex head, Vertex& forced) {
        ++stamp_;
        int sinks = 0;
        int remaining = 0;
        for (Vertex w = 0; w < n_; ++w) {
            if (visited_[w]) continue;
            ++remaining;
            int preds = 0;
            Vertex last_pred = -1;
            for (Vertex u : g_.in_neighbors(w)) {
                if (!visited_[u] || u == head) {
                    last_pred = u;
                    if (++preds > 1) break;
                }
            }
            if (preds == 0) return false;
            if (preds == 1) {
                if (last_pred == head) {
                    if (forced >= 0) return false;
                    forced = w;
                } else {
                    if (pred_owner_[last_pred] == stamp_) return false;
                    pred_owner_[last_pred] = stamp_;
                }
            }
            int succs = 0;
            Vertex last_succ = -1;
            for (Vertex x : g_.out_neighbors(w)) {
                if (!visited_[x] || (cycle_ && x == start_)) {
                    last_succ = x;
                    ++succs;
                }
            }
            succ_count_[w] = succs;
            if (succs == 0) {
                if (cycle_ || ++sinks > 1) return false;
            } else if (succs == 1 && cycle_) {
                if (succ_owner_[last_succ] == stamp_) return false;
                succ_owner_[last_succ] = stamp_;
            }
        }
        if (reach_count(head, true) != remaining) return false;
        if (cycle_ && reach_count(start_, false) != remaining) return false;
        return true;
    }

    // Unvisited vertices reachable from `from` through unvisited vertices.
    int reach_count(Vertex from, bool forward) {
        ++stamp_;
        queue_.clear();
        queue_.push_back(from);
        int count = 0;
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            const Vertex u = queue_[i];
            auto nbrs = forward ? g_.out_neighbors(u) : g_.in_neighbors(u);
            for (Vertex w : nbrs) {
                if (visited_[w] || seen_[w] == stamp_) continue;
                seen_[w] = stamp_;
                ++count;
                queue_.push_back(w);
            }
        }
        return count;
    }

    const Digraph& g_;
    Meter& meter_;
    bool cycle_;
    int n_;
    Vertex start_ = 0;
    std::vector<char> visited_;
    std::vector<int> succ_count_;
    std::vector<std::uint64_t> pred_owner_, succ_owner_, seen_;
    std::uint64_t stamp_ = 0;
    std::vector<Vertex> path_;
    std::vector<Vertex> queue_;
};

bool has_degree_zero(const Digraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) == 0 || g.out_degree(v) == 0) return true;
    return false;
}

// Branch and bound for the longest simple path or cycle.
class LongestSearch {
public:
    LongestSearch(const Digraph& g, Meter& meter)
        : g_(g), meter_(meter), n_(g.vertex_count()), allowed_(static_cast<std::size_t>(n_), 0),
          visited_(static_cast<std::size_t>(n_), 0), seen_(static_cast<std::size_t>(n_), 0) {}

    std::vector<Vertex> longest_path() {
        cycle_ = false;
        std::fill(allowed_.begin(), allowed_.end(), 1);
        for (Vertex s = 0; s < n_ && static_cast<int>(best_.size()) < n_; ++s) run_from(s);
        return best_;
    }

    std::vector<Vertex> longest_cycle() {
        cycle_ = true;
        for (Vertex s = 0; s < n_; ++s) {
            if (n_ - s <= static_cast<int>(best_.size())) break;
            // Only the strong component of s inside G[{v >= s}] can host a
            // cycle whose minimum vertex is s.
            std::vector<char> removed(static_cast<std::size_t>(n_), 0);
            for (Vertex v = 0; v < s; ++v) removed[v] = 1;
            std::fill(allowed_.begin(), allowed_.end(), 0);
            for (const auto& comp : strongly_connected_components(g_, removed)) {
                if (comp.front() != s) continue;
                if (comp.size() > 1)
                    for (Vertex v : comp) allowed_[v] = 1;
            }
            if (allowed_[s]) run_from(s);
        }
        return best_;
    }

private:
    void run_from(Vertex s) {
        std::fill(visited_.begin(), visited_.end(), 0);
        start_ = s;
        path_.assign(1, s);
        visited_[s] = 1;
        dfs();
    }

    bool complete() const { return static_cast<int>(best_.size()) == n_; }

    void dfs() {
        meter_.tick();
        const Vertex head = path_.back();
        if (cycle_) {
            if (path_.size() >= 2 && path_.size() > best_.size() && g_.has_edge(head, start_)) best_ = path_;
        } else if (path_.size() > best_.size()) {
            best_ = path_;
        }
        if (complete()) return;
        if (path_.size() + static_cast<std::size_t>(reach_count(head)) <= best_.size()) return;
        for (Vertex w : g_.out_neighbors(head)) {
            if (!allowed_[w] || visited_[w]) continue;
            visited_[w] = 1;
            path_.push_back(w);
            dfs();
            path_.pop_back();
            visited_[w] = 0;
            if (complete()) return;
        }
    }

    int reach_count(Vertex from) {
        ++stamp_;
        queue_.assign(1, from);
        int count = 0;
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            for (Vertex w : g_.out_neighbors(queue_[i])) {
                if (!allowed_[w] || visited_[w] || seen_[w] == stamp_) continue;
                seen_[w] = stamp_;
                ++count;
                queue_.push_back(w);
            }
        }
        return count;
    }

    const Digraph& g_;
    Meter& meter_;
    int n_;
    bool cycle_ = false;
    Vertex start_ = 0;
    std::vector<char> allowed_, visited_;
    std::vector<std::uint64_t> seen_;
    std::uint64_t stamp_ = 0;
    std::vector<Vertex> path_, best_, queue_;
};

}  // namespace

SolveResult<CycleWitness> hamiltonian_cycle(const Digraph& g, const SolverBudget& b) {
    b.validate();
    if (g.vertex_count() <= b.max_bitmask_vertices) return hamiltonian_cycle_bitmask(g, b);
    return hamiltonian_cycle_backtrack(g, b);
}

SolveResult<CycleWitness> hamiltonian_cycle_bitmask(const Digraph& g, const SolverBudget& b) {
    b.validate();
    const int n = g.vertex_count();
    if (n > b.max_bitmask_vertices) throw std::invalid_argument("graph too large for the bitmask solver");
    if (n < 2) return make_no<CycleWitness>();
    Meter meter(b);
    try {
        // Vertex 0 is the fixed start; bits index vertices 1..n-1.
        const int bits = n - 1;
        const auto out = neighbor_masks(g, true, 1);
        const std::uint32_t full = (1U << bits) - 1;
        std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
        // reach[mask] bit v: a Hamiltonian path of `mask` starts at v+1 and
        // ends at a vertex with an edge back to 0.
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if ((mask & 0xFFFFU) == 0) meter.check_time();
            std::uint32_t res = 0;
            for (std::uint32_t rem = mask; rem; rem &= rem - 1) {
                const int v = lowest_bit(rem);
                const std::uint32_t rest = mask & ~(1U << v);
                const bool ok = rest == 0 ? g.has_edge(v + 1, 0) : (out[v + 1] & reach[rest]) != 0;
                if (ok) res |= 1U << v;
            }
            reach[mask] = res;
        }
        if ((out[0] & reach[full]) == 0) return make_no<CycleWitness>(meter.nodes());
        CycleWitness w;
        w.vertices.push_back(0);
        follow_reach(out, reach, 0, full, 1, w.vertices);
        return make_yes(std::move(w), meter.nodes());
    } catch (const BudgetExceeded&) {
        return make_exceeded<CycleWitness>(meter.nodes());
    }
}

SolveResult<CycleWitness> hamiltonian_cycle_backtrack(const Digraph& g, const SolverBudget& b) {
    b.validate();
    const int n = g.vertex_count();
    if (n < 2 || has_degree_zero(g)) return make_no<CycleWitness>();
    if (strongly_connected_components(g).size() != 1) return make_no<CycleWitness>();
    Meter meter(b);
    try {
        HamSearch search(g, meter, true);
        if (search.search(0)) return make_yes(CycleWitness{search.path()}, meter.nodes());
        return make_no<CycleWitness>(meter.nodes());
    } catch (const BudgetExceeded&) {
        return make_exceeded<CycleWitness>(meter.nodes());
    }
}

SolveResult<PathWitness> hamiltonian_path(const Digraph& g, const SolverBudget& b) {
    b.validate();
    if (g.vertex_count() <= b.max_bitmask_vertices) return hamiltonian_path_bitmask(g, b);
    return hamiltonian_path_backtrack(g, b);
}

SolveResult<PathWitness> hamiltonian_path_bitmask(const Digraph& g, const SolverBudget& b) {
    b.validate();
    const int n = g.vertex_count();
    if (n > b.max_bitmask_vertices) throw std::invalid_argument("graph too large for the bitmask solver");
    if (n == 0) return make_no<PathWitness>();
    Meter meter(b);
    try {
        const auto out = neighbor_masks(g, true, 0);
        const auto reach = path_reach_table(out, n, meter);
        const std::uint32_t full = (1U << n) - 1;
        if (reach[full] == 0) return make_no<PathWitness>(meter.nodes());
        PathWitness w;
        const int start = lowest_bit(reach[full]);
        w.vertices.push_back(start);
        follow_reach(out, reach, start, full & ~(1U << start), 0, w.vertices);
        return make_yes(std::move(w), meter.nodes());
    } catch (const BudgetExceeded&) {
        return make_exceeded<PathWitness>(meter.nodes());
    }
}

SolveResult<PathWitness> hamiltonian_path_backtrack(const Digraph& g, const SolverBudget& b) {
    b.validate();
    const int n = g.vertex_count();
    if (n == 0) return make_no<PathWitness>();
    if (n == 1) return make_yes(PathWitness{{0}}, 0);
    std::vector<Vertex> sources;
    int sinks = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0) sources.push_back(v);
        if (g.out_degree(v) == 0) ++sinks;
    }
    if (sources.size() > 1 || sinks > 1) return make_no<PathWitness>();
    std::vector<Vertex> starts = sources;
    if (starts.empty())
        for (Vertex v = 0; v < n; ++v) starts.push_back(v);
    Meter meter(b);
    try {
        HamSearch search(g, meter, false);
        for (Vertex s : starts)
            if (search.search(s)) return make_yes(PathWitness{search.path()}, meter.nodes());
        return make_no<PathWitness>(meter.nodes());
    } catch (const BudgetExceeded&) {
        return make_exceeded<PathWitness>(meter.nodes());
    }
}

SolveResult<PathWitness> longest_path_exact(const Digraph& g, const SolverBudget& b) {
    b.validate();
    const int n = g.vertex_count();
    if (n == 0) return make_no<PathWitness>();
    Meter meter(b);
    try {
        if (n > b.max_bitmask_vertices) {
            LongestSearch search(g, meter);
            return make_yes(PathWitness{search.longest_path()}, meter.nodes());
        }
        const auto out = neighbor_masks(g, true, 0);
        const auto reach = path_reach_table(out, n, meter);
        int best = 0;
        std::uint32_t best_mask = 1;
        for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
            const int size = std::popcount(mask);
            if (size > best && reach[mask] != 0) {
                best = size;
                best_mask = mask;
            }
        }
        PathWitness w;
        const int start = lowest_bit(reach[best_mask]);
        w.vertices.push_back(start);
        follow_reach(out, reach, start, best_mask & ~(1U << start), 0, w.vertices);
        return make_yes(std::move(w), meter.nodes());
    } catch (const BudgetExceeded&) {
        return make_exceeded<PathWitness>(meter.nodes());
    }
}

SolveResult<CycleWitness> longest_cycle_exact(const Digraph& g, const SolverBudget& b) {
    b.validate();
    const int n = g.vertex_count();
    if (n < 2) return make_no<CycleWitness>();
    Meter meter(b);
    try {
        if (n > b.max_bitmask_vertices) {
            LongestSearch search(g, meter);
            auto best = search.longest_cycle();
            if (best.empty()) return make_no<CycleWitness>(meter.nodes());
            return make_yes(CycleWitness{std::move(best)}, meter.nodes());
        }
        const auto in = neighbor_masks(g, false, 0);
        const std::uint32_t full = (1U << n) - 1;
        // from_low[mask] bit v: a path from the lowest vertex of `mask` to v
        // visits exactly `mask`.
        std::vector<std::uint32_t> from_low(static_cast<std::size_t>(full) + 1, 0);
        int best = 0;
        std::uint32_t best_mask = 0;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if ((mask & 0xFFFFU) == 0) meter.check_time();
            const int low = lowest_bit(mask);
            if (mask == (1U << low)) {
                from_low[mask] = mask;
                continue;
            }
            std::uint32_t res = 0;
            for (std::uint32_t rem = mask & (mask - 1); rem; rem &= rem - 1) {
                const int v = lowest_bit(rem);
                if ((in[v] & from_low[mask & ~(1U << v)]) != 0) res |= 1U << v;
            }
            from_low[mask] = res;
            const int size = std::popcount(mask);
            if (size > best && (res & in[low]) != 0) {
                best = size;
                best_mask = mask;
            }
        }
        if (best == 0) return make_no<CycleWitness>(meter.nodes());
        const int s = lowest_bit(best_mask);
        std::vector<Vertex> rev;
        int cur = lowest_bit(from_low[best_mask] & in[s]);
        std::uint32_t mask = best_mask;
        while (cur != s) {
            rev.push_back(cur);
            mask &= ~(1U << cur);
            cur = lowest_bit(in[cur] & from_low[mask]);
        }
        rev.push_back(s);
        std::reverse(rev.begin(), rev.end());
        return make_yes(CycleWitness{std::move(rev)}, meter.nodes());
    } catch (const BudgetExceeded&) {
        return make_exceeded<CycleWitness>(meter.nodes());
    }
}

namespace {

bool clique_dfs(const MccInstance& inst, int cls, std::vector<Vertex>& chosen, Meter& meter) {
    if (cls == inst.k()) return true;
    for (Vertex v : inst.color_class(cls)) {
        meter.tick();
        bool ok = true;
        for (Vertex u : chosen)
            if (!inst.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(v);
        if (clique_dfs(inst, cls + 1, chosen, meter)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

SolveResult<CliqueWitness> multicolored_clique_exact(const MccInstance& inst, const SolverBudget& b) {
    b.validate();
    Meter meter(b);
    try {
        std::vector<Vertex> chosen;
        if (clique_dfs(inst, 0, chosen, meter)) return make_yes(CliqueWitness{chosen}, meter.nodes());
        return make_no<CliqueWitness>(meter.nodes());
    } catch (const BudgetExceeded&) {
        return make_exceeded<CliqueWitness>(meter.nodes());
    }
}

PathWitness dag_longest_path(const Digraph& g) {
    auto order = topological_order(g);
    if (!order) throw std::invalid_argument("dag_longest_path: graph has a cycle");
    const int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<int> len(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> pred(static_cast<std::size_t>(n), -1);
    for (Vertex v : *order)
        for (Vertex u : g.in_neighbors(v))
            if (len[u] + 1 > len[v]) {
                len[v] = len[u] + 1;
                pred[v] = u;
            }
    Vertex end = static_cast<Vertex>(std::max_element(len.begin(), len.end()) - len.begin());
    PathWitness w;
    for (Vertex v = end; v >= 0; v = pred[v]) w.vertices.push_back(v);
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
}

}  // namespace dirham
