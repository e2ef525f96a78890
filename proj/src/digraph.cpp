#include "dirham/digraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace dirham {

namespace {

void build_csr(int n, const std::vector<Edge>& sorted_edges, bool by_head,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : sorted_edges) ++offsets[static_cast<std::size_t>(by_head ? v : u) + 1];
    for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.assign(sorted_edges.size(), 0);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : sorted_edges) {
        const Vertex key = by_head ? v : u;
        targets[fill[key]++] = by_head ? u : v;
    }
    // Reverse lists are produced in tail order; forward lists are already
    // sorted because the edge list is.
    if (by_head) {
        for (int i = 0; i < n; ++i)
            std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                      targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
    }
}

bool is_removed(std::span<const char> removed, Vertex v) {
    return !removed.empty() && removed[static_cast<std::size_t>(v)] != 0;
}

}  // namespace

Digraph::Digraph(int vertex_count) : Digraph(vertex_count, std::span<const Edge>{}) {}

Digraph::Digraph(int vertex_count, std::span<const Edge> edges, std::map<Vertex, std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    std::vector<Edge> sorted(edges.begin(), edges.end());
    for (const auto& [u, v] : sorted) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");
    for (const auto& [v, text] : labels_) {
        if (v < 0 || v >= n_) throw std::invalid_argument("label for unknown vertex " + std::to_string(v));
    }
    build_csr(n_, sorted, false, out_offsets_, out_targets_);
    build_csr(n_, sorted, true, in_offsets_, in_sources_);
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    auto out = out_neighbors(u);
    return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out_neighbors(u)) result.emplace_back(u, v);
    return result;
}

std::optional<std::string_view> Digraph::label(Vertex v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return std::string_view(it->second);
}

bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_offsets_ == b.out_offsets_ && a.out_targets_ == b.out_targets_ &&
           a.labels_ == b.labels_;
}

Vertex DigraphBuilder::add_vertex() { return n_++; }

Vertex DigraphBuilder::add_vertex(std::string label) {
    const Vertex v = n_++;
    labels_[v] = std::move(label);
    return v;
}

std::string_view to_string(WitnessError e) {
    switch (e) {
        case WitnessError::none: return "ok";
        case WitnessError::empty: return "empty";
        case WitnessError::too_short: return "too_short";
        case WitnessError::vertex_out_of_range: return "vertex_out_of_range";
        case WitnessError::repeated_vertex: return "repeated_vertex";
        case WitnessError::missing_edge: return "missing_edge";
        case WitnessError::not_hamiltonian: return "not_hamiltonian";
    }
    return "unknown";
}

namespace {

WitnessCheck check_sequence(const Digraph& g, const std::vector<Vertex>& seq, bool closed, bool hamiltonian) {
    if (seq.empty()) return {WitnessError::empty, 0};
    if (closed && seq.size() < 2) return {WitnessError::too_short, 0};
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!g.contains(seq[i])) return {WitnessError::vertex_out_of_range, i};
        if (seen[seq[i]]) return {WitnessError::repeated_vertex, i};
        seen[seq[i]] = 1;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return {WitnessError::missing_edge, i};
    if (closed && !g.has_edge(seq.back(), seq.front())) return {WitnessError::missing_edge, seq.size() - 1};
    if (hamiltonian && seq.size() != static_cast<std::size_t>(g.vertex_count()))
        return {WitnessError::not_hamiltonian, seq.size()};
    return {};
}

}  // namespace

WitnessCheck validate_witness(const Digraph& g, const CycleWitness& w, bool hamiltonian) {
    return check_sequence(g, w.vertices, true, hamiltonian);
}

WitnessCheck validate_witness(const Digraph& g, const PathWitness& w, bool hamiltonian) {
    return check_sequence(g, w.vertices, false, hamiltonian);
}

CycleWitness normalize_cycle(const CycleWitness& w) {
    if (w.vertices.empty()) return w;
    CycleWitness out = w;
    auto smallest = std::min_element(out.vertices.begin(), out.vertices.end());
    std::rotate(out.vertices.begin(), smallest, out.vertices.end());
    return out;
}

std::optional<std::vector<Vertex>> topological_order(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n));
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex w : g.out_neighbors(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic(const Digraph& g) { return is_acyclic_without(g, {}); }

bool is_acyclic_without(const Digraph& g, std::span<const char> removed) {
    const int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack;
    int alive = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (is_removed(removed, v)) continue;
        ++alive;
        for (Vertex u : g.in_neighbors(v))
            if (!is_removed(removed, u)) ++indeg[v];
        if (indeg[v] == 0) stack.push_back(v);
    }
    int popped = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++popped;
        for (Vertex w : g.out_neighbors(v))
            if (!is_removed(removed, w) && --indeg[w] == 0) stack.push_back(w);
    }
    return popped == alive;
}

bool verify_dfvs(const Digraph& g, std::span<const Vertex> dfvs) {
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : dfvs) {
        if (!g.contains(v)) throw std::invalid_argument("dfvs vertex out of range");
        removed[v] = 1;
    }
    return is_acyclic_without(g, removed);
}

std::optional<CycleWitness> shortest_cycle(const Digraph& g, std::span<const char> removed) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::optional<CycleWitness> result;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        if (is_removed(removed, s) || g.in_degree(s) == 0 || g.out_degree(s) == 0) continue;
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        Vertex closing = -1;
        int closing_len = best;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            // Any cycle closed from here or later has length >= dist[u] + 1.
            if (dist[u] + 1 >= closing_len) break;
            for (Vertex w : g.out_neighbors(u)) {
                if (is_removed(removed, w)) continue;
                if (w == s) {
                    closing = u;
                    closing_len = dist[u] + 1;
                    break;
                }
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if (closing >= 0 && closing_len < best) {
            best = closing_len;
            CycleWitness c;
            for (Vertex v = closing; v != s; v = parent[v]) c.vertices.push_back(v);
            c.vertices.push_back(s);
            std::reverse(c.vertices.begin(), c.vertices.end());
            result = std::move(c);
            if (best == 2) break;
        }
    }
    return result;
}

std::optional<int> girth(const Digraph& g) {
    auto c = shortest_cycle(g);
    if (!c) return std::nullopt;
    return static_cast<int>(c->length());
}

namespace {

bool dfvs_branch(const Digraph& g, std::vector<char>& removed, int depth, std::vector<Vertex>& chosen) {
    auto cycle = shortest_cycle(g, removed);
    if (!cycle) return true;
    if (depth == 0) return false;
    std::vector<Vertex> options = cycle->vertices;
    std::sort(options.begin(), options.end());
    for (Vertex v : options) {
        removed[v] = 1;
        chosen.push_back(v);
        if (dfvs_branch(g, removed, depth - 1, chosen)) return true;
        chosen.pop_back();
        removed[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_min_dfvs(const Digraph& g, int budget) {
    if (budget < 0) throw std::invalid_argument("negative dfvs budget");
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int size = 0; size <= budget; ++size) {
        std::vector<Vertex> chosen;
        if (dfvs_branch(g, removed, size, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
    return strongly_connected_components(g, {});
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g, std::span<const char> removed) {
    // Iterative Tarjan.
    const int n = g.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;
    std::vector<std::vector<Vertex>> components;
    int counter = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (is_removed(removed, root) || index[root] >= 0) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            auto out = g.out_neighbors(v);
            if (next < out.size()) {
                const Vertex w = out[next++];
                if (is_removed(removed, w)) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Vertex done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

EdgeSubdivision subdivide_edge(const Digraph& g, Edge e) {
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("cannot subdivide missing edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ")");
    const Vertex w = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    std::erase(edges, e);
    edges.emplace_back(e.first, w);
    edges.emplace_back(w, e.second);
    return {Digraph(w + 1, edges, g.labels()), w};
}

std::vector<Vertex> cycle_successors(int vertex_count, const CycleWitness& w) {
    std::vector<Vertex> succ(static_cast<std::size_t>(vertex_count), -1);
    const auto& seq = w.vertices;
    for (std::size_t i = 0; i < seq.size(); ++i) succ[seq[i]] = seq[(i + 1) % seq.size()];
    return succ;
}

}  // namespace dirham
