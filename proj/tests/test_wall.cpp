#include <doctest.h>

#include <map>

#include "dirham/generators.hpp"
#include "dirham/wall.hpp"
#include "support/naive.hpp"

using namespace dirham;

namespace {

WallSubdivision plain(int order) {
    const auto w = build_wall(order);
    return subdivide_wall(w, std::vector<int>(w.graph.edge_count(), 0));
}

int total_degree(const Digraph& g, Vertex v) { return g.in_degree(v) + g.out_degree(v); }

}  // namespace

TEST_CASE("grid edges match the definition") {
    const auto g1 = build_grid(1);
    CHECK(g1.graph.vertex_count() == 2);
    CHECK(g1.graph.edges() == std::vector<Edge>{{0, 1}, {1, 0}});
    const auto g4 = build_grid(4);
    CHECK(g4.graph.vertex_count() == 32);
    const int k = 4;
    // k cycles of length 2k plus 2k columns of k-1 edges.
    CHECK(g4.graph.edge_count() == static_cast<std::size_t>(k * 2 * k + 2 * k * (k - 1)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 2 * k; ++j) {
            CHECK(g4.graph.has_edge(g4.id(i, j), g4.id(i, (j + 1) % (2 * k))));
            if (i + 1 < k) {
                if (j % 2 == 0) CHECK(g4.graph.has_edge(g4.id(i, j), g4.id(i + 1, j)));
                else CHECK(g4.graph.has_edge(g4.id(i + 1, j), g4.id(i, j)));
            }
        }
    CHECK_THROWS_AS(build_grid(0), std::invalid_argument);
}

TEST_CASE("wall splits exactly the degree-4 vertices") {
    for (int order = 1; order <= 6; ++order) {
        const auto grid = build_grid(order);
        const auto wall = build_wall(order);
        int deg4 = 0;
        for (Vertex v = 0; v < grid.graph.vertex_count(); ++v)
            if (total_degree(grid.graph, v) == 4) ++deg4;
        CHECK(wall.graph.vertex_count() == 2 * order * order + deg4);
        for (Vertex v = 0; v < wall.graph.vertex_count(); ++v) CHECK(total_degree(wall.graph, v) <= 3);
        for (Vertex v = 0; v < grid.graph.vertex_count(); ++v)
            CHECK(wall.is_split(v) == (total_degree(grid.graph, v) == 4));
    }
}

TEST_CASE("subdivision identity, doubling and contraction") {
    const auto w = build_wall(3);
    const auto id = plain(3);
    CHECK(id.graph == w.graph);
    CHECK(contraction_recovers_wall(id));
    const auto once = subdivide_wall(w, std::vector<int>(w.graph.edge_count(), 1));
    CHECK(girth(once.graph) == 2 * *girth(w.graph));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto h = subdivide_wall(w, gen_subdivision_plan({seed, 0, 3}, 3));
        CHECK(contraction_recovers_wall(h));
        CHECK(*girth(h.graph) >= *girth(w.graph));
        const auto again = wall_subdivision_from_json(to_json(h));
        CHECK(again.graph == h.graph);
    }
    CHECK_THROWS_AS(subdivide_wall(w, {1, 2}), std::invalid_argument);
    auto neg = std::vector<int>(w.graph.edge_count(), 0);
    neg[0] = -1;
    CHECK_THROWS_AS(subdivide_wall(w, neg), std::invalid_argument);
}

TEST_CASE("segments partition each cycle") {
    for (int order : {3, 5, 7}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto h = subdivide_wall(build_wall(order), gen_subdivision_plan({seed, 0, 3}, order));
            for (int i = 0; i < order; ++i) {
                const auto segs = decompose_segments(h, i);
                const auto cyc = h.host_cycle(i);
                CHECK(static_cast<int>(segs.size()) >= (order - 1) / 2 + 1);
                std::vector<Vertex> joined;
                int total = 0;
                for (std::size_t s = 0; s < segs.size(); ++s) {
                    total += segs[s].length();
                    CHECK(segs[s].back() == segs[(s + 1) % segs.size()].front());
                    joined.insert(joined.end(), segs[s].vertices.begin(), segs[s].vertices.end() - 1);
                }
                CHECK(total == static_cast<int>(cyc.size()));
                // Same cyclic sequence, possibly rotated.
                REQUIRE(joined.size() == cyc.size());
                const auto at = std::find(cyc.begin(), cyc.end(), joined.front());
                REQUIRE(at != cyc.end());
                std::rotate(joined.begin(), joined.begin() + (cyc.end() - at), joined.end());
                CHECK(joined == cyc);
                if (i + 1 < order) {
                    // Endpoints have a rung up, internal vertices do not.
                    for (const auto& s : segs)
                        for (std::size_t a = 0; a < s.vertices.size(); ++a) {
                            bool up = false;
                            for (Vertex w : h.graph.out_neighbors(s.vertices[a])) {
                                while (h.layer(w) < 0) w = h.graph.out_neighbors(w)[0];
                                if (h.layer(w) == i + 1) up = true;
                            }
                            const bool endpoint = a == 0 || a + 1 == s.vertices.size();
                            CHECK(up == endpoint);
                        }
                }
            }
        }
    }
}

TEST_CASE("unsubdivided interior segments have length four") {
    const auto h = plain(5);
    for (int i = 1; i + 1 < 5; ++i)
        for (const auto& s : decompose_segments(h, i)) {
            CHECK(s.length() == 4);
            CHECK(s.entry_candidates.size() == 1);
        }
    CHECK_THROWS_AS(decompose_segments(h, 5), std::invalid_argument);
}

TEST_CASE("subdivided segment length is four plus its expansions") {
    const int order = 5;
    const auto w = build_wall(order);
    const auto plan = gen_subdivision_plan({17, 0, 3}, order);
    const auto h = subdivide_wall(w, plan);
    std::map<Edge, int> extra;
    for (std::size_t e = 0; e < h.wall_edges.size(); ++e) extra[h.wall_edges[e]] = plan[e];
    for (int i = 1; i + 1 < order; ++i)
        for (const auto& s : decompose_segments(h, i)) {
            int expected = 0, wall_steps = 0;
            Vertex prev = -1;
            for (Vertex v : s.vertices) {
                if (!h.is_wall_vertex(v)) continue;
                if (prev >= 0) {
                    expected += 1 + extra.at({prev, v});
                    ++wall_steps;
                }
                prev = v;
            }
            CHECK(wall_steps == 4);
            CHECK(s.length() == expected);
        }
}

TEST_CASE("shortest segment") {
    const auto h = plain(5);
    const auto c = shortest_segment(h, 2);
    const int cyc = static_cast<int>(h.host_cycle(2).size());
    CHECK(c.segment.length() == 4);
    CHECK(c.complement_length() == cyc - 4);
    CHECK(3 * c.complement_length() >= 2 * cyc);
    CHECK(c.segment.front() == shortest_segment(h, 2).segment.front());

    // Blow up every segment but one on cycle 2; the unexpanded one wins.
    const auto segs = decompose_segments(h, 2);
    auto plan = std::vector<int>(h.wall_edges.size(), 0);
    for (std::size_t s = 1; s < segs.size(); ++s)
        for (std::size_t a = 0; a + 1 < segs[s].vertices.size(); ++a) {
            const Edge e{segs[s].vertices[a], segs[s].vertices[a + 1]};
            const auto it = std::lower_bound(h.wall_edges.begin(), h.wall_edges.end(), e);
            plan[it - h.wall_edges.begin()] = 5;
        }
    const auto heavy = subdivide_wall(h.wall, plan);
    const auto pick = shortest_segment(heavy, 2);
    CHECK(pick.segment.length() == 4);
    CHECK(pick.segment.front() == segs[0].front());
    for (const auto& s : decompose_segments(heavy, 2)) CHECK(pick.segment.length() <= s.length());
}

TEST_CASE("extracted path meets the bound") {
    const auto w3 = extract_long_path(plain(3));
    CHECK(w3.k == 1);
    CHECK(validate_witness(plain(3).graph, w3.path, false));
    CHECK(static_cast<long long>(w3.path.length()) >= w3.girth);
    const auto h5 = plain(5);
    const auto w5 = extract_long_path(h5);
    CHECK(w5.girth == *girth(h5.graph));
    CHECK(static_cast<long long>(w5.path.length()) >= 2LL * w5.girth);
    CHECK_THROWS_AS(extract_long_path(plain(4)), std::invalid_argument);
    for (int order : {5, 7, 9})
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto h = subdivide_wall(build_wall(order), gen_subdivision_plan({seed, 0, 3}, order));
            const auto x = extract_long_path(h);
            CHECK(naive::is_simple_path(h.graph, x.path.vertices));
            CHECK(x.girth == *girth(h.graph));
            CHECK(x.meets_bound());
        }
}

TEST_CASE("complement pieces are contiguous and disjoint") {
    const auto h = subdivide_wall(build_wall(7), gen_subdivision_plan({4, 0, 2}, 7));
    const auto x = extract_long_path(h);
    const auto& p = x.path.vertices;
    std::vector<char> seen(h.graph.vertex_count(), 0);
    for (const auto& choice : x.choices) {
        const auto& c = choice.complement;
        auto it = std::search(p.begin(), p.end(), c.begin(), c.end());
        CHECK(it != p.end());
        for (Vertex v : c) {
            CHECK_FALSE(seen[v]);
            seen[v] = 1;
        }
    }
    CHECK(x.choices.size() == 4);
}

TEST_CASE("extractor never beats the exact longest path") {
    const auto h = plain(3);
    const auto x = extract_long_path(h);
    const auto best = longest_path_exact(h.graph);
    REQUIRE(best.witness);
    CHECK(best.witness->length() >= x.path.length());
}

TEST_CASE("win-win with and without a certificate") {
    // Host graph: a subdivided W_5 shifted by two extra vertices.
    const auto h = subdivide_wall(build_wall(5), gen_subdivision_plan({2, 0, 1}, 5));
    const int shift = 2, n = h.graph.vertex_count() + shift;
    std::vector<Edge> edges;
    for (auto [a, b] : h.graph.edges()) edges.emplace_back(a + shift, b + shift);
    edges.emplace_back(0, 1);
    edges.emplace_back(1, shift);
    const Digraph g(n, edges);
    WallCertificate cert{h, {}};
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) cert.embedding.push_back(v + shift);
    const auto r = winwin_longest_path(g, 2, &cert);
    CHECK(r.status == SolveStatus::yes);
    CHECK(r.used_certificate);
    REQUIRE(r.witness);
    CHECK(validate_witness(g, *r.witness, false));
    CHECK(static_cast<long long>(r.witness->length()) >= r.required);

    const auto back = wall_certificate_from_json(to_json(cert));
    CHECK(back.embedding == cert.embedding);
    CHECK_THROWS_AS(winwin_longest_path(g, 1, &cert), std::invalid_argument);
    cert.embedding[0] = 0;
    CHECK_THROWS_AS(winwin_longest_path(g, 2, &cert), std::invalid_argument);

    const Digraph chain(3, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(winwin_longest_path(chain, 1, nullptr), std::invalid_argument);

    naive::SplitMix rng(12);
    for (int t = 0; t < 40; ++t) {
        const auto small = naive::random_digraph(rng, 3 + rng.below(5), 30);
        if (!girth(small)) continue;
        for (int k = 1; k <= 3; ++k) {
            const auto res = winwin_longest_path(small, k, nullptr);
            CHECK((res.status == SolveStatus::yes) == (naive::longest_path_length(small) >= *girth(small) * k));
            CHECK_FALSE(res.used_certificate);
        }
    }
}

TEST_CASE("dot rendering colours layers") {
    const auto dot = wall_to_dot(plain(3));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("fillcolor") != std::string::npos);
}
