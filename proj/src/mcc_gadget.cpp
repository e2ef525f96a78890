#include "dirham/mcc_gadget.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dirham {

GadgetLayout::GadgetLayout(const std::vector<int>& class_sizes)
    : k_(static_cast<int>(class_sizes.size())), sizes_(class_sizes) {
    Vertex next = 0;
    for (int i = 0; i < k_; ++i) {
        path_base_.push_back(next);
        next += sizes_[i] * 2 * k_;
    }
    cycle_base_.assign(static_cast<std::size_t>(k_), std::vector<Vertex>(static_cast<std::size_t>(k_), -1));
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) {
            if (j == i) continue;
            cycle_base_[i][j] = next;
            next += 2 * sizes_[i];
        }
    const int pairs = k_ * (k_ - 1) / 2;
    universal_base_ = next;
    s_base_ = universal_base_ + k_;
    t_base_ = s_base_ + k_;
    s_hat_base_ = t_base_ + k_;
    t_hat_base_ = s_hat_base_ + pairs;
    total_ = t_hat_base_ + pairs;
}

int GadgetLayout::pair_index(int i, int j) const {
    // Lexicographic rank of (i, j), i < j.
    return i * k_ - i * (i + 1) / 2 + (j - i - 1);
}

int GadgetLayout::path_class(Vertex v) const {
    for (int i = 0; i < k_; ++i)
        if (v >= path_base_[i] && v < path_base_[i] + sizes_[i] * 2 * k_) return i;
    return -1;
}

std::string GadgetRole::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case GadgetRoleKind::path_left: out << "path-left(i=" << i << ",v=" << v << ")"; break;
        case GadgetRoleKind::path_right: out << "path-right(i=" << i << ",v=" << v << ")"; break;
        case GadgetRoleKind::path_out: out << "path-out(i=" << i << ",j=" << j << ",v=" << v << ")"; break;
        case GadgetRoleKind::path_in: out << "path-in(i=" << i << ",j=" << j << ",v=" << v << ")"; break;
        case GadgetRoleKind::universal: out << "universal(i=" << i << ")"; break;
        case GadgetRoleKind::cycle_out: out << "cycle-out(i=" << i << ",j=" << j << ",v=" << v << ")"; break;
        case GadgetRoleKind::cycle_in: out << "cycle-in(i=" << i << ",j=" << j << ",v=" << v << ")"; break;
        case GadgetRoleKind::source: out << "S(i=" << i << ")"; break;
        case GadgetRoleKind::sink: out << "T(i=" << i << ")"; break;
        case GadgetRoleKind::source_hat: out << "Shat(i=" << i << ",j=" << j << ")"; break;
        case GadgetRoleKind::sink_hat: out << "That(i=" << i << ",j=" << j << ")"; break;
    }
    return out.str();
}

int gadget_dfvs_size(int k) { return k * (k - 1) + 2 * k + k * (k - 1) / 2; }

int gadget_vertex_count(const std::vector<int>& class_sizes) {
    const int k = static_cast<int>(class_sizes.size());
    int total = 0;
    for (int size : class_sizes) total += 2 * k * size + (k - 1) * 2 * size;
    return total + k + 2 * k + k * (k - 1);
}

GadgetGraph build_gadget(const MccInstance& inst) {
    const int k = inst.k();
    if (k < 2) throw std::invalid_argument("gadget construction needs k >= 2");
    std::vector<int> sizes;
    for (const auto& cls : inst.classes()) sizes.push_back(static_cast<int>(cls.size()));
    GadgetLayout L(sizes);

    std::vector<GadgetRole> roles(static_cast<std::size_t>(L.vertex_count()), GadgetRole{GadgetRoleKind::universal});
    std::vector<Edge> edges;

    for (int i = 0; i < k; ++i) {
        const auto& cls = inst.color_class(i);
        for (int pos = 0; pos < sizes[i]; ++pos) {
            const Vertex v = cls[pos];
            roles[L.left(i, pos)] = {GadgetRoleKind::path_left, i, -1, v};
            roles[L.right(i, pos)] = {GadgetRoleKind::path_right, i, -1, v};
            for (int j = 0; j < k; ++j) {
                if (j == i) continue;
                roles[L.port_out(i, pos, j)] = {GadgetRoleKind::path_out, i, j, v};
                roles[L.port_in(i, pos, j)] = {GadgetRoleKind::path_in, i, j, v};
            }
            // Block path, then the hop to the next block.
            auto [first, last] = L.block_range(i, pos);
            for (Vertex x = first; x < last; ++x) edges.emplace_back(x, x + 1);
            if (pos + 1 < sizes[i]) edges.emplace_back(last, L.left(i, pos + 1));
            edges.emplace_back(L.universal(i), L.left(i, pos));
            edges.emplace_back(L.universal(i), L.right(i, pos));
            edges.emplace_back(L.left(i, pos), L.universal(i));
            edges.emplace_back(L.right(i, pos), L.universal(i));
        }
        roles[L.universal(i)] = {GadgetRoleKind::universal, i, -1, -1};
    }

    for (int i = 0; i < k; ++i) {
        const auto& cls = inst.color_class(i);
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            const int m = sizes[i];
            for (int pos = 0; pos < m; ++pos) {
                roles[L.cycle_out(i, j, pos)] = {GadgetRoleKind::cycle_out, i, j, cls[pos]};
                roles[L.cycle_in(i, j, pos)] = {GadgetRoleKind::cycle_in, i, j, cls[pos]};
                edges.emplace_back(L.cycle_out(i, j, pos), L.cycle_in(i, j, pos));
                edges.emplace_back(L.cycle_in(i, j, pos), L.cycle_out(i, j, (pos + 1) % m));
                edges.emplace_back(L.cycle_out(i, j, pos), L.port_out(i, pos, j));
                edges.emplace_back(L.port_in(i, pos, j), L.cycle_in(i, j, pos));
            }
        }
    }

    std::vector<Vertex> sources, sinks;
    for (int i = 0; i < k; ++i) {
        roles[L.s(i)] = {GadgetRoleKind::source, i, -1, -1};
        roles[L.t(i)] = {GadgetRoleKind::sink, i, -1, -1};
        edges.emplace_back(L.s(i), L.path_first(i));
        edges.emplace_back(L.path_last(i), L.t(i));
        sources.push_back(L.s(i));
        sinks.push_back(L.t(i));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            roles[L.s_hat(i, j)] = {GadgetRoleKind::source_hat, i, j, -1};
            roles[L.t_hat(i, j)] = {GadgetRoleKind::sink_hat, i, j, -1};
            for (int pos = 0; pos < sizes[i]; ++pos) edges.emplace_back(L.s_hat(i, j), L.port_in(i, pos, j));
            for (int pos = 0; pos < sizes[j]; ++pos) edges.emplace_back(L.port_out(j, pos, i), L.t_hat(i, j));
            sources.push_back(L.s_hat(i, j));
            sinks.push_back(L.t_hat(i, j));
        }
    for (Vertex t : sinks)
        for (Vertex s : sources) edges.emplace_back(t, s);

    // Adjacency matrix; edges inside a class are ignored.
    for (const auto& [a, b] : inst.graph().edges()) {
        const int i = inst.class_of(a), j = inst.class_of(b);
        if (i >= j) continue;
        edges.emplace_back(L.port_out(i, inst.position_in_class(a), j), L.port_in(j, inst.position_in_class(b), i));
    }

    std::vector<Vertex> dfvs;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) dfvs.push_back(L.cycle_out(i, j, 0));
    dfvs.insert(dfvs.end(), sinks.begin(), sinks.end());
    for (int i = 0; i < k; ++i) dfvs.push_back(L.universal(i));
    std::sort(dfvs.begin(), dfvs.end());

    GadgetGraph gg{inst, L, Digraph(L.vertex_count(), edges), std::move(dfvs), std::move(roles)};
    if (static_cast<int>(gg.dfvs.size()) != gadget_dfvs_size(k))
        throw std::logic_error("gadget DFVS has unexpected size");
    if (!verify_dfvs(gg.graph, gg.dfvs)) throw std::logic_error("gadget minus DFVS is not acyclic");
    return gg;
}

namespace {

// Whole cycle C^{i->j} entered at c_in(pos), ending at c_out(pos).
void append_cycle_from(const GadgetLayout& L, int i, int j, int pos, std::vector<Vertex>& seq) {
    const int m = L.class_size(i);
    for (int step = 0; step < 2 * m; ++step) {
        const int idx = (2 * pos + 1 + step) % (2 * m);
        seq.push_back(idx % 2 == 0 ? L.cycle_out(i, j, idx / 2) : L.cycle_in(i, j, idx / 2));
    }
}

}  // namespace

CycleWitness clique_to_hamcycle(const GadgetGraph& gg, const CliqueWitness& w) {
    const auto& inst = gg.source;
    if (!is_multicolored_clique(inst, w))
        throw std::invalid_argument("witness is not a multicolored clique of the source instance");
    const auto& L = gg.layout;
    const int k = L.k();
    std::vector<int> chosen(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) chosen[i] = inst.position_in_class(w.vertices[i]);

    CycleWitness h;
    auto& seq = h.vertices;
    for (int i = 0; i < k; ++i) {
        // Z^i skips the interior of the chosen block via u^i.
        seq.push_back(L.s(i));
        for (int pos = 0; pos < L.class_size(i); ++pos) {
            auto [first, last] = L.block_range(i, pos);
            if (pos == chosen[i]) {
                seq.push_back(first);
                seq.push_back(L.universal(i));
                seq.push_back(last);
            } else {
                for (Vertex x = first; x <= last; ++x) seq.push_back(x);
            }
        }
        seq.push_back(L.t(i));
        for (int j = i + 1; j < k; ++j) {
            const int a = chosen[i], b = chosen[j];
            seq.push_back(L.s_hat(i, j));
            seq.push_back(L.port_in(i, a, j));
            append_cycle_from(L, i, j, a, seq);
            seq.push_back(L.port_out(i, a, j));
            seq.push_back(L.port_in(j, b, i));
            append_cycle_from(L, j, i, b, seq);
            seq.push_back(L.port_out(j, b, i));
            seq.push_back(L.t_hat(i, j));
        }
    }
    if (!validate_witness(gg.graph, h, true)) throw std::logic_error("assembled gadget cycle is not Hamiltonian");
    return h;
}

namespace {

struct BoundaryUse {
    std::vector<int> out_used;  // positions whose e_out edge lies on h
    std::vector<int> in_used;   // positions whose e_in edge lies on h
};

BoundaryUse boundary_use(const GadgetLayout& L, const std::vector<Vertex>& succ, int i, int j) {
    BoundaryUse use;
    for (int pos = 0; pos < L.class_size(i); ++pos) {
        if (succ[L.cycle_out(i, j, pos)] == L.port_out(i, pos, j)) use.out_used.push_back(pos);
        if (succ[L.port_in(i, pos, j)] == L.cycle_in(i, j, pos)) use.in_used.push_back(pos);
    }
    return use;
}

std::string join(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t a = 0; a < xs.size(); ++a) s += (a ? "," : "") + std::to_string(xs[a]);
    return s + "}";
}

}  // namespace

CliqueWitness hamcycle_to_clique(const GadgetGraph& gg, const CycleWitness& h) {
    if (auto check = validate_witness(gg.graph, h, true); !check)
        throw std::invalid_argument("not a Hamiltonian cycle of the gadget: " + std::string(to_string(check.error)));
    const auto& L = gg.layout;
    const int k = L.k();
    const auto succ = cycle_successors(gg.graph.vertex_count(), h);
    CliqueWitness w;
    for (int i = 0; i < k; ++i) {
        int chosen = -1;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            auto use = boundary_use(L, succ, i, j);
            if (use.out_used != use.in_used || use.out_used.size() != 1)
                throw StructuralViolation("cycle C^{" + std::to_string(i) + "->" + std::to_string(j) +
                                          "} entered at " + join(use.in_used) + ", left at " +
                                          join(use.out_used));
            if (chosen >= 0 && chosen != use.out_used.front())
                throw StructuralViolation("class " + std::to_string(i) + " enters its cycles from two blocks");
            chosen = use.out_used.front();
        }
        w.vertices.push_back(gg.source.color_class(i)[chosen]);
    }
    if (!is_multicolored_clique(gg.source, w))
        throw StructuralViolation("blocks selected by the cycle do not form a clique");
    return w;
}

bool LemmaReport::all_passed() const {
    return applicable && std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
}

const LemmaOutcome* LemmaReport::first_failure() const {
    for (const auto& o : outcomes)
        if (!o.passed) return &o;
    return nullptr;
}

LemmaReport check_structural_lemmas(const GadgetGraph& gg, const CycleWitness& h) {
    LemmaReport report;
    if (auto check = validate_witness(gg.graph, h, true); !check) {
        report.rejection = "not a Hamiltonian cycle: " + std::string(to_string(check.error));
        return report;
    }
    report.applicable = true;
    const auto& L = gg.layout;
    const int k = L.k();
    const auto succ = cycle_successors(gg.graph.vertex_count(), h);
    auto on_h = [&](Vertex u, Vertex v) { return succ[u] == v; };

    // entry[i][j]: positions with both boundary edges of C^{i->j} on h.
    std::vector<std::vector<std::vector<int>>> entry(static_cast<std::size_t>(k),
                                                     std::vector<std::vector<int>>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            auto use = boundary_use(L, succ, i, j);
            const bool paired = use.out_used == use.in_used;
            report.outcomes.push_back({"boundary-pairs", i, j, paired,
                                       "e_out on " + join(use.out_used) + ", e_in on " + join(use.in_used)});
            if (paired) entry[i][j] = use.out_used;
        }

    std::vector<int> selected(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        std::vector<int> partial, full;
        for (int pos = 0; pos < L.class_size(i); ++pos) {
            int used = 0, total = 0;
            for (int j = 0; j < k; ++j) {
                if (j == i) continue;
                total += 2;
                used += on_h(L.cycle_out(i, j, pos), L.port_out(i, pos, j)) ? 1 : 0;
                used += on_h(L.port_in(i, pos, j), L.cycle_in(i, j, pos)) ? 1 : 0;
            }
            if (used == total) full.push_back(pos);
            else if (used > 0) partial.push_back(pos);
        }
        report.outcomes.push_back({"uniform-entry", i, -1, partial.empty(), "partially entered blocks " + join(partial)});
        const bool single = partial.empty() && full.size() == 1;
        report.outcomes.push_back({"single-block", i, -1, single, "fully entered blocks " + join(full)});
        if (single) selected[i] = full.front();
    }

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto& e = entry[i][j];
            if (e.size() != 1) {
                report.outcomes.push_back({"unused-port-arc", i, j, false, "no unique entry block"});
                continue;
            }
            const bool unused = !on_h(L.port_out(i, e.front(), j), L.port_in(i, e.front(), j));
            report.outcomes.push_back({"unused-port-arc", i, j, unused, "block " + std::to_string(e.front())});
        }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int crossing = 0;
            for (Vertex u = 0; u < gg.graph.vertex_count(); ++u) {
                const int cu = L.path_class(u), cv = L.path_class(succ[u]);
                if ((cu == i && cv == j) || (cu == j && cv == i)) ++crossing;
            }
            report.outcomes.push_back(
                {"cross-path-arcs", i, j, crossing <= 1, std::to_string(crossing) + " edges between P^i and P^j"});
            bool adjacency = false;
            if (selected[i] >= 0 && selected[j] >= 0)
                adjacency = on_h(L.port_out(i, selected[i], j), L.port_in(j, selected[j], i));
            report.outcomes.push_back({"adjacency-arc", i, j, adjacency, "selected blocks " +
                                                                             std::to_string(selected[i]) + "," +
                                                                             std::to_string(selected[j])});
        }
    return report;
}

json to_json(const GadgetGraph& gg) {
    json roles = json::array();
    for (const auto& r : gg.roles) roles.push_back(r.to_string());
    return {{"k", gg.layout.k()},
            {"classes", gg.source.classes()},
            {"graph", to_json(gg.graph)},
            {"dfvs", gg.dfvs},
            {"roles", std::move(roles)}};
}

std::string gadget_to_dot(const GadgetGraph& gg, const CycleWitness* overlay) {
    static const char* palette[] = {"lightblue", "lightgreen", "khaki", "pink", "plum", "lightsalmon"};
    DotStyle style;
    style.name = "gadget";
    style.highlighted.insert(gg.dfvs.begin(), gg.dfvs.end());
    for (Vertex v = 0; v < gg.graph.vertex_count(); ++v) {
        const auto& r = gg.roles[v];
        style.labels[v] = r.to_string();
        switch (r.kind) {
            case GadgetRoleKind::source:
            case GadgetRoleKind::sink:
            case GadgetRoleKind::source_hat:
            case GadgetRoleKind::sink_hat: style.fill_colors[v] = "gray90"; break;
            case GadgetRoleKind::cycle_out:
            case GadgetRoleKind::cycle_in: style.fill_colors[v] = "white"; break;
            default: style.fill_colors[v] = palette[r.i % 6]; break;
        }
    }
    if (overlay) style.marked_edges = witness_edges(*overlay);
    return to_dot(gg.graph, style);
}

}  // namespace dirham
