#include "dirham/girth_reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dirham/errors.hpp"

namespace dirham {

DfvsInstance::DfvsInstance(Digraph graph, std::vector<Vertex> dfvs, std::optional<Vertex> special)
    : graph_(std::move(graph)), dfvs_(std::move(dfvs)) {
    std::sort(dfvs_.begin(), dfvs_.end());
    if (std::adjacent_find(dfvs_.begin(), dfvs_.end()) != dfvs_.end())
        throw std::invalid_argument("DFVS lists a vertex twice");
    for (Vertex v : dfvs_)
        if (!graph_.contains(v)) throw std::invalid_argument("DFVS vertex out of range: " + std::to_string(v));
    if (dfvs_.size() < 2) throw std::invalid_argument("the reduction needs |X| >= 2");
    if (!verify_dfvs(graph_, dfvs_)) throw std::invalid_argument("graph - X is not acyclic");
    special_ = special.value_or(dfvs_.front());
    if (!in_dfvs(special_)) throw std::invalid_argument("special vertex is not in X");
}

json to_json(const DfvsInstance& inst) {
    return {{"graph", to_json(inst.graph())}, {"dfvs", inst.dfvs()}, {"special", inst.special()}};
}

DfvsInstance dfvs_instance_from_json(const json& j) {
    if (!j.contains("graph") || !j.contains("dfvs"))
        throw std::invalid_argument("DFVS instance JSON needs \"graph\" and \"dfvs\"");
    std::optional<Vertex> special;
    if (j.contains("special")) special = j.at("special").get<Vertex>();
    return DfvsInstance(digraph_from_json(j.at("graph")), j.at("dfvs").get<std::vector<Vertex>>(), special);
}

GirthInstance build_girth_instance(const DfvsInstance& inst) {
    const int n = inst.n(), k = inst.k();
    const Digraph& g = inst.graph();
    GirthInstance gi{inst, Digraph(), k + 1, {}, std::vector<int>(static_cast<std::size_t>(n), -1)};

    DigraphBuilder b(n);
    for (Vertex v : inst.dfvs()) {
        const int length = v == inst.special() ? n + k - 1 : n - 1;
        SplicePath sp{v, v, -1, {v}};
        for (int step = 0; step < length; ++step) sp.path.push_back(b.add_vertex());
        sp.v_out = sp.path.back();
        for (std::size_t a = 0; a + 1 < sp.path.size(); ++a) b.add_edge(sp.path[a], sp.path[a + 1]);
        b.add_edge(sp.v_out, sp.v_in);
        gi.split_index[v] = static_cast<int>(gi.split_map.size());
        gi.split_map.push_back(std::move(sp));
    }
    auto tail_of = [&](Vertex u) { return gi.split_index[u] >= 0 ? gi.split_map[gi.split_index[u]].v_out : u; };
    for (const auto& [u, v] : g.edges()) b.add_edge(tail_of(u), v);
    gi.graph = b.build();

    if (gi.graph.vertex_count() != n * (k + 1))
        throw std::logic_error("girth instance does not have n(k+1) vertices");
    if (girth(gi.graph) != n) throw std::logic_error("girth instance does not have girth n");
    return gi;
}

CycleWitness lift_hamcycle(const GirthInstance& gi, const CycleWitness& h) {
    if (auto check = validate_witness(gi.source.graph(), h, true); !check)
        throw std::invalid_argument("not a Hamiltonian cycle of the source: " + std::string(to_string(check.error)));
    CycleWitness out;
    for (Vertex v : h.vertices) {
        if (gi.split_index[v] < 0) {
            out.vertices.push_back(v);
        } else {
            const auto& p = gi.split_map[gi.split_index[v]].path;
            out.vertices.insert(out.vertices.end(), p.begin(), p.end());
        }
    }
    if (!validate_witness(gi.graph, out, true)) throw std::logic_error("lifted cycle is not Hamiltonian");
    return out;
}

CycleWitness project_hamcycle(const GirthInstance& gi, const CycleWitness& h) {
    if (auto check = validate_witness(gi.graph, h, true); !check)
        throw std::invalid_argument("not a Hamiltonian cycle of the girth instance: " +
                                    std::string(to_string(check.error)));
    const int n = gi.source.n();
    const auto& seq = h.vertices;
    const std::size_t len = seq.size();
    // Start at a vertex that is not inside a splice path.
    std::size_t start = 0;
    while (start < len && seq[start] >= n) ++start;
    if (start == len) throw StructuralViolation("cycle never visits an original vertex");

    CycleWitness out;
    std::size_t idx = 0;
    while (idx < len) {
        const Vertex v = seq[(start + idx) % len];
        if (v >= n) throw StructuralViolation("splice vertex " + std::to_string(v) + " entered out of order");
        out.vertices.push_back(v);
        if (gi.split_index[v] < 0) {
            ++idx;
            continue;
        }
        const auto& p = gi.split_map[gi.split_index[v]].path;
        for (std::size_t step = 0; step < p.size(); ++step, ++idx)
            if (idx >= len || seq[(start + idx) % len] != p[step])
                throw StructuralViolation("splice path of " + std::to_string(v) + " not traversed contiguously");
    }
    if (!validate_witness(gi.source.graph(), out, true)) throw StructuralViolation("projected cycle is not Hamiltonian");
    return out;
}

json to_json(const GirthInstance& gi) {
    json split = json::array();
    for (const auto& sp : gi.split_map)
        split.push_back({{"v", sp.original}, {"v_in", sp.v_in}, {"v_out", sp.v_out}, {"path", sp.path}});
    return {{"source", to_json(gi.source)},
            {"graph", to_json(gi.graph)},
            {"girth", gi.girth()},
            {"target_multiplier", gi.target_multiplier},
            {"required_cycle_length", gi.required_cycle_length()},
            {"split_map", std::move(split)}};
}

std::optional<CycleWitness> hamcycle_small_dfvs(const Digraph& g, const std::vector<Vertex>& dfvs) {
    if (dfvs.size() > 1) throw std::invalid_argument("helper only handles |X| <= 1");
    if (!verify_dfvs(g, dfvs)) throw std::invalid_argument("X is not a DFVS");
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (dfvs.empty()) return std::nullopt;  // acyclic: no cycle at all
    const Vertex x = dfvs.front();
    if (n == 1) return std::nullopt;
    std::vector<Edge> rest;
    std::vector<Vertex> ids;
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v)
        if (v != x) {
            local[v] = static_cast<int>(ids.size());
            ids.push_back(v);
        }
    for (const auto& [u, v] : g.edges())
        if (u != x && v != x) rest.emplace_back(local[u], local[v]);
    const auto order = topological_order(Digraph(static_cast<int>(ids.size()), rest));
    // A Hamiltonian path of a DAG must follow its topological order, which
    // then has to be unique: consecutive vertices must be adjacent.
    CycleWitness h{{x}};
    for (std::size_t a = 0; a < order->size(); ++a) {
        const Vertex v = ids[(*order)[a]];
        if (a > 0 && !g.has_edge(h.vertices.back(), v)) return std::nullopt;
        h.vertices.push_back(v);
    }
    if (!g.has_edge(x, h.vertices[1]) || !g.has_edge(h.vertices.back(), x)) return std::nullopt;
    return h;
}

}  // namespace dirham
