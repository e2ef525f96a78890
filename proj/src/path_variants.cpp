#include "dirham/path_variants.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dirham/errors.hpp"

namespace dirham {

PathInstance cycle_to_path_instance(const Digraph& g, Vertex v) {
    if (!g.contains(v)) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    const int n = g.vertex_count();
    DigraphBuilder b(n + 1);
    for (const auto& [a, c] : g.edges()) b.add_edge(a, c == v ? n : c);
    return {b.build(), {v, n, v, {}}};
}

PathWitness lift_cycle_to_path(const PathInstance& pi, const Digraph& g, const CycleWitness& h) {
    if (auto check = validate_witness(g, h, true); !check)
        throw std::invalid_argument("not a Hamiltonian cycle: " + std::string(to_string(check.error)));
    const auto& s = h.vertices;
    const auto at = std::find(s.begin(), s.end(), pi.split.removed) - s.begin();
    PathWitness p;
    for (std::size_t a = 0; a < s.size(); ++a) p.vertices.push_back(s[(at + a) % s.size()]);
    p.vertices.push_back(pi.split.v_in);
    return p;
}

CycleWitness project_path_to_cycle(const PathInstance& pi, const PathWitness& p) {
    if (auto check = validate_witness(pi.graph, p, true); !check)
        throw std::invalid_argument("not a Hamiltonian path: " + std::string(to_string(check.error)));
    const auto& s = p.vertices;
    const std::size_t body = s.size() - pi.split.tail.size();
    if (s.front() != pi.split.v_out || s[body - 1] != pi.split.v_in)
        throw StructuralViolation("Hamiltonian path does not run from v_out to v_in");
    return CycleWitness{std::vector<Vertex>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(body) - 1)};
}

json to_json(const SplitVertexMap& m) {
    return {{"removed", m.removed}, {"v_in", m.v_in}, {"v_out", m.v_out}, {"tail", m.tail}};
}

LongPathGirthInstance build_longest_path_above_girth_instance(const GirthInstance& gi) {
    const auto& src = gi.source;
    Vertex v = -1;
    for (Vertex u = 0; u < src.n(); ++u)
        if (!src.in_dfvs(u)) {
            v = u;
            break;
        }
    if (v < 0) v = gi.split_map[gi.split_index[src.special()]].path[1];

    PathInstance pi = cycle_to_path_instance(gi.graph, v);
    const int n = src.n();
    DigraphBuilder b(pi.graph.vertex_count());
    for (const auto& e : pi.graph.edges()) b.add_edge(e.first, e.second);
    Vertex prev = pi.split.v_in;
    for (int step = 0; step < n - 1; ++step) {
        const Vertex t = b.add_vertex();
        b.add_edge(prev, t);
        pi.split.tail.push_back(t);
        prev = t;
    }
    pi.graph = b.build();

    LongPathGirthInstance lp{gi, std::move(pi), src.k() + 2, n};
    if (lp.path.graph.vertex_count() != n * (src.k() + 2))
        throw std::logic_error("long-path instance does not have n(k+2) vertices");
    if (dirham::girth(lp.path.graph) != n) throw std::logic_error("long-path instance does not have girth n");
    return lp;
}

PathWitness lift_to_long_path(const LongPathGirthInstance& lp, const CycleWitness& girth_cycle) {
    PathWitness p = lift_cycle_to_path(lp.path, lp.girth_instance.graph, girth_cycle);
    p.vertices.insert(p.vertices.end(), lp.path.split.tail.begin(), lp.path.split.tail.end());
    return p;
}

CycleWitness project_long_path(const LongPathGirthInstance& lp, const PathWitness& p) {
    if (static_cast<long long>(p.length()) < lp.required_path_length())
        throw std::invalid_argument("path is shorter than the required length");
    return project_path_to_cycle(lp.path, p);
}

json to_json(const LongPathGirthInstance& lp) {
    return {{"graph", to_json(lp.path.graph)},
            {"split", to_json(lp.path.split)},
            {"girth", lp.girth},
            {"multiplier", lp.multiplier},
            {"required_path_length", lp.required_path_length()}};
}

DfasInstance dfvs_to_dfas(const Digraph& g, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const int n = g.vertex_count();
    std::vector<Vertex> out_of(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) out_of[v] = v;
    DfasInstance d{Digraph(), s, {}, {}};
    DigraphBuilder b(n);
    for (Vertex v : s) {
        if (!g.contains(v)) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        out_of[v] = b.add_vertex();
        d.v_out.push_back(out_of[v]);
        d.arcs.emplace_back(v, out_of[v]);
        b.add_edge(v, out_of[v]);
    }
    for (const auto& [u, w] : g.edges()) b.add_edge(out_of[u], w);
    d.graph = b.build();
    return d;
}

CycleWitness lift_cycle_to_dfas(const DfasInstance& d, const CycleWitness& h) {
    CycleWitness out;
    for (Vertex v : h.vertices) {
        out.vertices.push_back(v);
        auto it = std::lower_bound(d.split.begin(), d.split.end(), v);
        if (it != d.split.end() && *it == v) out.vertices.push_back(d.v_out[it - d.split.begin()]);
    }
    return out;
}

CycleWitness project_cycle_from_dfas(const DfasInstance& d, int source_vertex_count, const CycleWitness& h) {
    if (auto check = validate_witness(d.graph, h, false); !check)
        throw std::invalid_argument("not a cycle of the split graph: " + std::string(to_string(check.error)));
    CycleWitness out;
    for (Vertex v : h.vertices)
        if (v < source_vertex_count) out.vertices.push_back(v);
    return out;
}

json to_json(const DfasInstance& d) {
    json arcs = json::array();
    for (const auto& [a, b] : d.arcs) arcs.push_back({a, b});
    return {{"graph", to_json(d.graph)}, {"split", d.split}, {"v_out", d.v_out}, {"arcs", std::move(arcs)}};
}

std::vector<AdditiveInstance> build_additive_instances(const Digraph& g, int k) {
    const auto gg = girth(g);
    if (!gg) throw std::invalid_argument("graph is acyclic; girth undefined");
    if (k <= 0 || k >= *gg) throw std::invalid_argument("need 0 < k < girth");
    const int n = g.vertex_count();
    std::vector<AdditiveInstance> out;
    for (Vertex v = 0; v < n; ++v) {
        AdditiveInstance ai{Digraph(), v, {v}, {}, *gg, 2};
        DigraphBuilder b(n);
        for (int step = 0; step < *gg - k; ++step) {
            ai.path.push_back(b.add_vertex());
            b.add_edge(ai.path[ai.path.size() - 2], ai.path.back());
        }
        for (const auto& [a, c] : g.edges()) b.add_edge(a == v ? ai.path.back() : a, c);
        for (int step = 0; step < *gg; ++step) ai.cycle.push_back(b.add_vertex());
        for (int step = 0; step < *gg; ++step) b.add_edge(ai.cycle[step], ai.cycle[(step + 1) % *gg]);
        ai.graph = b.build();
        if (girth(ai.graph) != *gg) throw std::logic_error("additive instance changed the girth");
        out.push_back(std::move(ai));
    }
    return out;
}

PathWitness lift_additive_path(const AdditiveInstance& ai, const PathWitness& p) {
    PathWitness out;
    for (Vertex u : p.vertices) {
        if (u == ai.vertex) out.vertices.insert(out.vertices.end(), ai.path.begin(), ai.path.end());
        else out.vertices.push_back(u);
    }
    return out;
}

PathWitness project_additive_path(const AdditiveInstance& ai, int source_vertex_count, const PathWitness& p) {
    if (auto check = validate_witness(ai.graph, p, false); !check)
        throw std::invalid_argument("not a path of the instance: " + std::string(to_string(check.error)));
    PathWitness out;
    for (Vertex u : p.vertices) {
        if (std::find(ai.cycle.begin(), ai.cycle.end(), u) != ai.cycle.end())
            throw std::invalid_argument("path runs on the pinning cycle");
        const Vertex w = u < source_vertex_count ? u : ai.vertex;
        if (out.vertices.empty() || out.vertices.back() != w) out.vertices.push_back(w);
    }
    return out;
}

json to_json(const AdditiveInstance& ai) {
    return {{"graph", to_json(ai.graph)},
            {"vertex", ai.vertex},
            {"path", ai.path},
            {"cycle", ai.cycle},
            {"girth", ai.girth},
            {"multiplier", ai.multiplier},
            {"required_path_length", ai.required_path_length()}};
}

}  // namespace dirham
