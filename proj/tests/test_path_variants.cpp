#include <doctest.h>

#include "dirham/generators.hpp"
#include "dirham/path_variants.hpp"
#include "support/naive.hpp"

using namespace dirham;

namespace {

Digraph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Digraph(n, e);
}

int count_ham_paths(const Digraph& g) {
    int count = 0;
    const int n = g.vertex_count();
    naive::each_simple_path(g, [&](const std::vector<Vertex>& p) {
        if (static_cast<int>(p.size()) == n) ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("split vertex on a 3-cycle") {
    for (Vertex v = 0; v < 3; ++v) {
        const auto pi = cycle_to_path_instance(cycle_graph(3), v);
        CHECK(pi.graph.vertex_count() == 4);
        CHECK(pi.split.v_out == v);
        CHECK(pi.split.v_in == 3);
        CHECK(pi.graph.in_degree(pi.split.v_out) == 0);
        CHECK(pi.graph.out_degree(pi.split.v_in) == 0);
        CHECK(count_ham_paths(pi.graph) == 1);
    }
    CHECK_THROWS_AS(cycle_to_path_instance(cycle_graph(3), 3), std::invalid_argument);
}

TEST_CASE("cycle and path equivalence for every split vertex") {
    naive::SplitMix rng(41);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + rng.below(7);
        const auto g = naive::random_digraph(rng, n, 35 + rng.below(30));
        const bool ham = naive::has_ham_cycle(g);
        const auto hc = hamiltonian_cycle(g);
        for (Vertex v = 0; v < n; ++v) {
            const auto pi = cycle_to_path_instance(g, v);
            const auto hp = hamiltonian_path(pi.graph);
            CHECK(hp.yes() == ham);
            if (hp.witness) {
                CHECK(hp.witness->vertices.front() == pi.split.v_out);
                CHECK(hp.witness->vertices.back() == pi.split.v_in);
                const auto back = project_path_to_cycle(pi, *hp.witness);
                CHECK(naive::is_simple_cycle(g, back.vertices));
                CHECK(static_cast<int>(back.length()) == n);
            }
            if (hc.witness) {
                const auto lifted = lift_cycle_to_path(pi, g, *hc.witness);
                CHECK(validate_witness(pi.graph, lifted, true));
                CHECK(normalize_cycle(project_path_to_cycle(pi, lifted)) == normalize_cycle(*hc.witness));
            }
        }
    }
}

TEST_CASE("longest path above girth instance") {
    const auto gen = gen_digraph_with_dfvs({2, 5, 2, 0.3, true});
    const auto gi = build_girth_instance(gen.instance);
    const auto lp = build_longest_path_above_girth_instance(gi);
    CHECK(lp.path.graph.vertex_count() == 20);
    CHECK(girth(lp.path.graph) == 5);
    CHECK(lp.multiplier == 4);
    REQUIRE(lp.path.split.tail.size() == 4);
    CHECK(lp.path.graph.out_degree(lp.path.split.tail.back()) == 0);
    CHECK_FALSE(gi.source.in_dfvs(lp.path.split.removed));

    const auto lifted = lift_to_long_path(lp, lift_hamcycle(gi, *gen.plant));
    CHECK(static_cast<long long>(lifted.length()) == lp.required_path_length());
    CHECK(validate_witness(lp.path.graph, lifted, true));
    CHECK(project_hamcycle(gi, project_long_path(lp, lifted)).length() == 5);
}

TEST_CASE("longest path above girth equivalence on a yes and a no seed") {
    int yes = 0, no = 0;
    for (std::uint64_t seed = 0; seed < 40 && (yes == 0 || no == 0); ++seed) {
        const auto gen = gen_digraph_with_dfvs({seed, 5, 2, 0.25, seed % 2 == 0});
        const auto gi = build_girth_instance(gen.instance);
        const auto lp = build_longest_path_above_girth_instance(gi);
        REQUIRE(lp.path.graph.vertex_count() <= 20);
        const bool src = naive::has_ham_cycle(gen.instance.graph());
        const auto best = longest_path_exact(lp.path.graph);
        REQUIRE(best.witness);
        CHECK((static_cast<long long>(best.witness->length()) >= lp.required_path_length()) == src);
        (src ? yes : no)++;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}

TEST_CASE("dfvs to dfas") {
    const auto c3 = cycle_graph(3);
    CHECK(dfvs_to_dfas(c3, {}).graph == c3);
    const auto d = dfvs_to_dfas(c3, {1});
    CHECK(d.graph.vertex_count() == 4);
    REQUIRE(d.arcs.size() == 1);
    std::vector<Edge> rest;
    for (auto e : d.graph.edges())
        if (e != d.arcs[0]) rest.push_back(e);
    CHECK(is_acyclic(Digraph(4, rest)));

    naive::SplitMix rng(55);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + rng.below(7);
        const auto g = naive::random_digraph(rng, n, 40);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (rng.coin(50)) s.push_back(v);
        const auto dd = dfvs_to_dfas(g, s);
        const bool ham = naive::has_ham_cycle(g);
        const auto r = hamiltonian_cycle(dd.graph);
        CHECK(r.yes() == ham);
        if (r.witness) {
            const auto back = project_cycle_from_dfas(dd, n, *r.witness);
            CHECK(naive::is_simple_cycle(g, back.vertices));
            const auto again = lift_cycle_to_dfas(dd, back);
            CHECK(validate_witness(dd.graph, again, true));
        }
        // Removing the split arcs leaves g - S acyclic exactly when S is a DFVS.
        std::vector<Edge> rest;
        for (auto e : dd.graph.edges())
            if (std::find(dd.arcs.begin(), dd.arcs.end(), e) == dd.arcs.end()) rest.push_back(e);
        CHECK(is_acyclic(Digraph(dd.graph.vertex_count(), rest)) == verify_dfvs(g, s));
    }
}

TEST_CASE("additive instances") {
    const Digraph c4 = cycle_graph(4);
    CHECK_THROWS_AS(build_additive_instances(c4, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_additive_instances(c4, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_additive_instances(Digraph(3), 1), std::invalid_argument);
    const auto list = build_additive_instances(c4, 2);
    CHECK(list.size() == 4);
    for (const auto& ai : list) {
        CHECK(girth(ai.graph) == 4);
        CHECK(ai.required_path_length() == 8);
        CHECK(static_cast<int>(ai.path.size()) == 4 - 2 + 1);
    }
}

TEST_CASE("additive equivalence against enumeration") {
    naive::SplitMix rng(88);
    int tried = 0;
    for (int t = 0; t < 200 && tried < 40; ++t) {
        const int n = 3 + rng.below(4);
        const auto g = naive::random_digraph(rng, n, 30);
        const auto gg = girth(g);
        if (!gg || *gg < 2) continue;
        for (int k = 1; k < *gg; ++k) {
            ++tried;
            const bool src = naive::longest_path_length(g) >= *gg + k;
            bool any = false;
            for (const auto& ai : build_additive_instances(g, k)) {
                CHECK(girth(ai.graph) == *gg);
                REQUIRE(ai.graph.vertex_count() <= 24);
                const auto best = longest_path_exact(ai.graph);
                if (static_cast<long long>(best.witness->length()) >= ai.required_path_length()) {
                    any = true;
                    const auto back = project_additive_path(ai, n, *best.witness);
                    CHECK(naive::is_simple_path(g, back.vertices));
                    CHECK(static_cast<int>(back.length()) >= *gg + k);
                    const auto lifted = lift_additive_path(ai, back);
                    CHECK(validate_witness(ai.graph, lifted, false));
                    CHECK(static_cast<long long>(lifted.length()) >= ai.required_path_length());
                }
            }
            CHECK(any == src);
        }
    }
    CHECK(tried > 0);
}
