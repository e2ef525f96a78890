#include "dirham/wall.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dirham {

CylGrid build_grid(int order) {
    if (order < 1) throw std::invalid_argument("grid order must be >= 1");
    CylGrid grid{order, Digraph()};
    const int cols = 2 * order;
    std::vector<Edge> edges;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < cols; ++j) {
            edges.emplace_back(grid.id(i, j), grid.id(i, (j + 1) % cols));
            if (i + 1 < order) {
                if (j % 2 == 0) edges.emplace_back(grid.id(i, j), grid.id(i + 1, j));
                else edges.emplace_back(grid.id(i + 1, j), grid.id(i, j));
            }
        }
    grid.graph = Digraph(order * cols, edges);
    return grid;
}

CylWall build_wall(int order) {
    const CylGrid grid = build_grid(order);
    const int n = grid.graph.vertex_count();
    const int cols = 2 * order;
    CylWall w;
    w.order = order;
    w.in_of.resize(static_cast<std::size_t>(n));
    w.out_of.resize(static_cast<std::size_t>(n));
    DigraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) {
        w.in_of[v] = v;
        w.out_of[v] = grid.graph.in_degree(v) + grid.graph.out_degree(v) == 4 ? b.add_vertex() : v;
    }
    w.layer.resize(static_cast<std::size_t>(b.vertex_count()));
    w.column.resize(static_cast<std::size_t>(b.vertex_count()));
    for (Vertex v = 0; v < n; ++v) {
        w.layer[v] = w.layer[w.out_of[v]] = v / cols;
        w.column[v] = w.column[w.out_of[v]] = v % cols;
        if (w.is_split(v)) b.add_edge(v, w.out_of[v]);
    }
    for (const auto& [a, c] : grid.graph.edges()) b.add_edge(w.out_of[a], w.in_of[c]);
    w.graph = b.build();
    return w;
}

std::vector<Vertex> CylWall::cycle(int i) const {
    std::vector<Vertex> out;
    for (int j = 0; j < 2 * order; ++j) {
        const Vertex g = i * 2 * order + j;
        out.push_back(in_of[g]);
        if (is_split(g)) out.push_back(out_of[g]);
    }
    return out;
}

namespace {

int edge_index(const std::vector<Edge>& edges, Edge e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return -1;
    return static_cast<int>(it - edges.begin());
}

}  // namespace

int WallSubdivision::layer(Vertex v) const {
    const auto& o = provenance[v];
    if (o.wall_vertex >= 0) return wall.layer[o.wall_vertex];
    const auto [a, b] = wall_edges[o.edge];
    return wall.layer[a] == wall.layer[b] ? wall.layer[a] : -1;
}

std::vector<Vertex> WallSubdivision::host_cycle(int i) const {
    const auto ring = wall.cycle(i);
    std::vector<Vertex> out;
    for (std::size_t a = 0; a < ring.size(); ++a) {
        const auto& p = edge_paths[edge_index(wall_edges, {ring[a], ring[(a + 1) % ring.size()]})];
        out.insert(out.end(), p.begin(), p.end() - 1);
    }
    return out;
}

WallSubdivision subdivide_wall(const CylWall& w, const std::vector<int>& plan) {
    WallSubdivision h;
    h.wall = w;
    h.wall_edges = w.graph.edges();
    if (plan.size() != h.wall_edges.size())
        throw std::invalid_argument("plan needs one entry per wall edge (" + std::to_string(h.wall_edges.size()) + ")");
    if (std::any_of(plan.begin(), plan.end(), [](int c) { return c < 0; }))
        throw std::invalid_argument("plan entries must be non-negative");
    h.plan = plan;
    DigraphBuilder b(w.graph.vertex_count());
    for (Vertex v = 0; v < w.graph.vertex_count(); ++v) h.provenance.push_back({v, -1, 0});
    for (std::size_t e = 0; e < h.wall_edges.size(); ++e) {
        std::vector<Vertex> path{h.wall_edges[e].first};
        for (int p = 1; p <= plan[e]; ++p) {
            path.push_back(b.add_vertex());
            h.provenance.push_back({-1, static_cast<int>(e), p});
        }
        path.push_back(h.wall_edges[e].second);
        for (std::size_t a = 0; a + 1 < path.size(); ++a) b.add_edge(path[a], path[a + 1]);
        h.edge_paths.push_back(std::move(path));
    }
    h.graph = b.build();
    return h;
}

bool contraction_recovers_wall(const WallSubdivision& h) {
    const int wn = h.wall.graph.vertex_count();
    const int n = h.graph.vertex_count();
    if (static_cast<int>(h.provenance.size()) != n || h.edge_paths.size() != h.wall_edges.size()) return false;
    for (Vertex v = 0; v < n; ++v) {
        const auto& o = h.provenance[v];
        if ((v < wn) != (o.wall_vertex >= 0)) return false;
        if (o.wall_vertex >= 0 && o.wall_vertex != v) return false;
        if (o.wall_vertex < 0) {
            if (o.edge < 0 || o.edge >= static_cast<int>(h.edge_paths.size())) return false;
            const auto& p = h.edge_paths[o.edge];
            if (o.position < 1 || o.position + 1 >= static_cast<int>(p.size()) || p[o.position] != v) return false;
            if (h.graph.in_degree(v) != 1 || h.graph.out_degree(v) != 1) return false;
        }
    }
    std::vector<Edge> contracted;
    for (Vertex w = 0; w < wn; ++w)
        for (Vertex next : h.graph.out_neighbors(w)) {
            Vertex cur = next;
            int guard = 0;
            while (cur >= wn) {
                cur = h.graph.out_neighbors(cur).front();
                if (++guard > n) return false;
            }
            contracted.emplace_back(w, cur);
        }
    try {
        return Digraph(wn, contracted) == Digraph(wn, h.wall.graph.edges());
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace {

bool has_wall_out_to_layer(const CylWall& w, Vertex v, int layer) {
    for (Vertex u : w.graph.out_neighbors(v))
        if (w.layer[u] == layer) return true;
    return false;
}

bool has_wall_in_from_layer(const CylWall& w, Vertex v, int layer) {
    for (Vertex u : w.graph.in_neighbors(v))
        if (w.layer[u] == layer) return true;
    return false;
}

}  // namespace

std::vector<Segment> decompose_segments(const WallSubdivision& h, int i) {
    const int m = h.order();
    if (m < 2) throw std::invalid_argument("segments need a wall of order >= 2");
    if (i < 0 || i >= m) throw std::invalid_argument("cycle index out of range");
    const auto cycle = h.host_cycle(i);
    const auto& w = h.wall;
    auto is_delimiter = [&](Vertex v) {
        if (!h.is_wall_vertex(v)) return false;
        return i + 1 < m ? has_wall_out_to_layer(w, v, i + 1) : has_wall_in_from_layer(w, v, i - 1);
    };
    std::vector<std::size_t> cuts;
    for (std::size_t a = 0; a < cycle.size(); ++a)
        if (is_delimiter(cycle[a])) cuts.push_back(a);

    std::vector<Segment> out;
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        Segment s;
        s.cycle = i;
        const std::size_t from = cuts[c];
        const std::size_t to = c + 1 < cuts.size() ? cuts[c + 1] : cuts.front() + cycle.size();
        for (std::size_t a = from; a <= to; ++a) {
            const Vertex v = cycle[a % cycle.size()];
            s.vertices.push_back(v);
            if (i > 0 && a != from && a != to && h.is_wall_vertex(v) && has_wall_in_from_layer(w, v, i - 1))
                s.entry_candidates.push_back(v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

SegmentChoice shortest_segment(const WallSubdivision& h, int i) {
    auto segments = decompose_segments(h, i);
    auto best = std::min_element(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
        return a.length() != b.length() ? a.length() < b.length() : a.front() < b.front();
    });
    SegmentChoice choice{*best, {}};
    const auto cycle = h.host_cycle(i);
    const std::size_t start = std::find(cycle.begin(), cycle.end(), best->back()) - cycle.begin();
    for (std::size_t a = 0;; ++a) {
        const Vertex v = cycle[(start + a) % cycle.size()];
        choice.complement.push_back(v);
        if (v == best->front()) break;
    }
    return choice;
}

namespace {

std::vector<Vertex> walk(const std::vector<Vertex>& cycle, Vertex from, Vertex to) {
    std::size_t at = std::find(cycle.begin(), cycle.end(), from) - cycle.begin();
    if (at == cycle.size()) throw std::logic_error("walk start not on cycle");
    std::vector<Vertex> out;
    for (std::size_t a = 0; a < cycle.size(); ++a) {
        out.push_back(cycle[(at + a) % cycle.size()]);
        if (out.back() == to) return out;
    }
    throw std::logic_error("walk end not on cycle");
}

// Host path of the unique wall edge from wall vertex v to the given layer.
const std::vector<Vertex>& rung_from(const WallSubdivision& h, Vertex v, int layer) {
    for (Vertex u : h.wall.graph.out_neighbors(v))
        if (h.wall.layer[u] == layer) return h.edge_paths[edge_index(h.wall_edges, {v, u})];
    throw std::logic_error("missing rung from " + std::to_string(v));
}

const std::vector<Vertex>& rung_into(const WallSubdivision& h, Vertex v, int layer) {
    for (Vertex u : h.wall.graph.in_neighbors(v))
        if (h.wall.layer[u] == layer) return h.edge_paths[edge_index(h.wall_edges, {u, v})];
    throw std::logic_error("missing rung into " + std::to_string(v));
}

}  // namespace

LongPathExtraction extract_long_path(const WallSubdivision& h) {
    const int m = h.order();
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("extraction needs a wall of odd order 2k+1 >= 3");
    if (!contraction_recovers_wall(h)) throw std::invalid_argument("malformed wall subdivision");

    LongPathExtraction x;
    x.k = (m - 1) / 2;
    x.girth = girth(h.graph).value();
    x.required = static_cast<long long>(x.girth) * x.k;

    std::vector<Vertex> s_in(static_cast<std::size_t>(m), -1), s_out(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < m; i += 2) {
        auto choice = shortest_segment(h, i);
        s_out[i] = choice.segment.front();
        if (i == 0 || i == m - 1) {
            s_in[i] = choice.segment.back();
        } else {
            if (choice.segment.entry_candidates.size() != 1)
                throw std::logic_error("segment on cycle " + std::to_string(i) + " lacks a unique entry vertex");
            s_in[i] = choice.segment.entry_candidates.front();
        }
        x.choices.push_back(std::move(choice));
    }

    x.pieces.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto cycle = h.host_cycle(i);
        if (i % 2 == 0) {
            x.pieces[i] = walk(cycle, s_in[i], s_out[i]);
        } else {
            const Vertex start = rung_from(h, s_out[i - 1], i).back();
            const Vertex end = rung_into(h, s_in[i + 1], i).front();
            x.pieces[i] = walk(cycle, start, end);
        }
    }
    auto& path = x.path.vertices;
    for (int i = 0; i < m; ++i) {
        if (i > 0) {
            const auto& rung = rung_into(h, x.pieces[i].front(), i - 1);
            path.insert(path.end(), rung.begin() + 1, rung.end() - 1);
        }
        path.insert(path.end(), x.pieces[i].begin(), x.pieces[i].end());
    }
    if (!validate_witness(h.graph, x.path, false)) throw std::logic_error("extracted path is not a simple path");
    return x;
}

WinWinResult winwin_longest_path(const Digraph& g, int k, const WallCertificate* certificate,
                                 const SolverBudget& budget) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const auto gg = girth(g);
    if (!gg) throw std::invalid_argument("graph is acyclic; girth undefined");
    WinWinResult r;
    r.girth = *gg;
    r.required = static_cast<long long>(*gg) * k;

    if (certificate) {
        const auto& h = certificate->subdivision;
        const auto& emb = certificate->embedding;
        if (h.order() != 2 * k + 1) throw std::invalid_argument("certificate wall order must be 2k+1");
        if (!contraction_recovers_wall(h)) throw std::invalid_argument("certificate is not a wall subdivision");
        if (static_cast<int>(emb.size()) != h.graph.vertex_count())
            throw std::invalid_argument("embedding must map every wall vertex");
        std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
        for (Vertex v : emb) {
            if (!g.contains(v) || used[v]) throw std::invalid_argument("embedding is not injective into g");
            used[v] = 1;
        }
        for (const auto& [a, b] : h.graph.edges())
            if (!g.has_edge(emb[a], emb[b])) throw std::invalid_argument("embedding misses an edge of g");
        const auto x = extract_long_path(h);
        PathWitness p;
        for (Vertex v : x.path.vertices) p.vertices.push_back(emb[v]);
        r.status = SolveStatus::yes;
        r.witness = std::move(p);
        r.used_certificate = true;
        return r;
    }

    const auto res = longest_path_exact(g, budget);
    if (res.exceeded()) {
        r.status = SolveStatus::budget_exceeded;
    } else if (res.witness && static_cast<long long>(res.witness->length()) >= r.required) {
        r.status = SolveStatus::yes;
        r.witness = res.witness;
    } else {
        r.status = SolveStatus::no;
    }
    return r;
}

json to_json(const WallSubdivision& h) {
    json prov = json::array();
    for (const auto& o : h.provenance) {
        if (o.wall_vertex >= 0) prov.push_back({{"wall_vertex", o.wall_vertex}});
        else prov.push_back({{"edge", o.edge}, {"position", o.position}});
    }
    json edges = json::array();
    for (const auto& [a, b] : h.wall_edges) edges.push_back({a, b});
    json layers = json::array();
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) layers.push_back(h.layer(v));
    return {{"order", h.order()},   {"plan", h.plan},         {"graph", to_json(h.graph)},
            {"wall_edges", edges},  {"provenance", prov},     {"layers", layers}};
}

WallSubdivision wall_subdivision_from_json(const json& j) {
    if (!j.contains("order")) throw std::invalid_argument("wall JSON needs \"order\"");
    const auto wall = build_wall(j.at("order").get<int>());
    std::vector<int> plan(wall.graph.edge_count(), 0);
    if (j.contains("plan")) plan = j.at("plan").get<std::vector<int>>();
    auto h = subdivide_wall(wall, plan);
    if (j.contains("graph") && !(digraph_from_json(j.at("graph")) == h.graph))
        throw std::invalid_argument("wall graph does not match its order and plan");
    return h;
}

json to_json(const LongPathExtraction& x) {
    return {{"witness", to_json(x.path)},
            {"girth", x.girth},
            {"length", x.path.length()},
            {"required", x.required},
            {"k", x.k}};
}

json to_json(const WallCertificate& c) {
    return {{"order", c.subdivision.order()}, {"plan", c.subdivision.plan}, {"embedding", c.embedding}};
}

WallCertificate wall_certificate_from_json(const json& j) {
    return {wall_subdivision_from_json(j), j.at("embedding").get<std::vector<Vertex>>()};
}

std::string wall_to_dot(const WallSubdivision& h, const PathWitness* overlay) {
    static const char* palette[] = {"lightblue", "lightgreen", "khaki", "pink", "plum", "lightsalmon", "wheat",
                                    "lightcyan", "thistle"};
    DotStyle style;
    style.name = "wall";
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) {
        const int layer = h.layer(v);
        style.fill_colors[v] = layer < 0 ? "gray85" : palette[layer % 9];
        const auto& o = h.provenance[v];
        if (o.wall_vertex >= 0) {
            style.labels[v] = "C" + std::to_string(layer) + " col " + std::to_string(h.wall.column[v]);
        } else {
            const auto [a, b] = h.wall_edges[o.edge];
            style.labels[v] = std::to_string(a) + "->" + std::to_string(b) + " #" + std::to_string(o.position);
        }
    }
    if (overlay) style.marked_edges = witness_edges(*overlay);
    return to_dot(h.graph, style);
}

}  // namespace dirham
