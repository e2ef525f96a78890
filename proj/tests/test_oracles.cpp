#include <doctest.h>

#include "dirham/oracles.hpp"
#include "support/naive.hpp"

using namespace dirham;

namespace {

Digraph chain(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Digraph(n, e);
}

const Digraph c3(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});

SolverBudget backtrack_only() {
    SolverBudget b;
    b.max_bitmask_vertices = 1;
    return b;
}

}  // namespace

TEST_CASE("hamiltonian cycle basics") {
    auto r = hamiltonian_cycle(c3);
    REQUIRE(r.yes());
    CHECK(r.witness->vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(hamiltonian_cycle(chain(4)).no());
    CHECK(hamiltonian_cycle_backtrack(chain(4)).no());
}

TEST_CASE("hamiltonian path basics") {
    auto r = hamiltonian_path(Digraph(2, std::vector<Edge>{{0, 1}}));
    REQUIRE(r.yes());
    CHECK(r.witness->vertices == std::vector<Vertex>{0, 1});
    CHECK(hamiltonian_path(Digraph(2)).no());
}

TEST_CASE("budget overrun is reported, never as no") {
    std::vector<Edge> e;
    for (int u = 0; u < 30; ++u)
        for (int v = 0; v < 30; ++v)
            if (u != v && (v != 0 || u == 29)) e.emplace_back(u, v);
    SolverBudget b;
    b.node_limit = 5;
    const Digraph g(30, e);
    auto r = longest_path_exact(g, b);
    CHECK(r.exceeded());
    CHECK_FALSE(r.no());
    CHECK(to_string(SolveStatus::budget_exceeded) != to_string(SolveStatus::no));
}

TEST_CASE("budget validation") {
    SolverBudget b;
    b.max_bitmask_vertices = 40;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = {};
    b.node_limit = 0;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}

TEST_CASE("bitmask, backtracking and permutation oracles agree") {
    naive::SplitMix rng(2024);
    for (int t = 0; t < 400; ++t) {
        const int n = 1 + rng.below(8);
        const auto g = naive::random_digraph(rng, n, 20 + rng.below(50));
        const bool cyc = naive::has_ham_cycle(g), path = naive::has_ham_path(g);
        const auto a = hamiltonian_cycle_bitmask(g), b = hamiltonian_cycle_backtrack(g);
        const auto c = hamiltonian_path_bitmask(g), d = hamiltonian_path_backtrack(g);
        REQUIRE_FALSE(a.exceeded());
        REQUIRE_FALSE(b.exceeded());
        CHECK(a.yes() == cyc);
        CHECK(b.yes() == cyc);
        CHECK(c.yes() == path);
        CHECK(d.yes() == path);
        if (a.witness) CHECK(validate_witness(g, *a.witness, true));
        if (b.witness) CHECK(validate_witness(g, *b.witness, true));
        if (c.witness) CHECK(validate_witness(g, *c.witness, true));
        if (d.witness) CHECK(validate_witness(g, *d.witness, true));
    }
}

TEST_CASE("longest path and cycle") {
    CHECK(longest_path_exact(chain(4)).witness->length() == 3);
    CHECK(longest_path_exact(c3).witness->length() == 2);
    CHECK(longest_cycle_exact(chain(4)).no());
    // Figure eight: 3-cycle 0-1-2 and 4-cycle 0-3-4-5 sharing vertex 0.
    const Digraph eight(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(longest_cycle_exact(eight).witness->length() == 4);
    CHECK(naive::longest_cycle_length(eight) == 4);
}

TEST_CASE("longest path and cycle agree with enumeration in both solver modes") {
    naive::SplitMix rng(77);
    for (int t = 0; t < 150; ++t) {
        const int n = 1 + rng.below(8);
        const auto g = naive::random_digraph(rng, n, 15 + rng.below(35));
        for (const auto& budget : {SolverBudget{}, backtrack_only()}) {
            const auto p = longest_path_exact(g, budget);
            REQUIRE(p.witness);
            CHECK(static_cast<int>(p.witness->length()) == naive::longest_path_length(g));
            CHECK(validate_witness(g, *p.witness, false));
            const auto c = longest_cycle_exact(g, budget);
            const int lc = naive::longest_cycle_length(g);
            CHECK(c.yes() == (lc > 0));
            if (c.witness) {
                CHECK(static_cast<int>(c.witness->length()) == lc);
                CHECK(validate_witness(g, *c.witness, false));
                CHECK(static_cast<int>(c.witness->length()) >= *girth(g));
            }
        }
    }
}

TEST_CASE("multicolored clique") {
    CHECK(multicolored_clique_exact(MccInstance(Digraph(2), {{0}, {1}})).no());
    auto one = multicolored_clique_exact(MccInstance(Digraph(2), {{0, 1}}));
    REQUIRE(one.yes());
    CHECK(one.witness->vertices.size() == 1);
    naive::SplitMix rng(5);
    for (int t = 0; t < 200; ++t) {
        const int k = 2 + rng.below(3);
        std::vector<std::vector<Vertex>> classes;
        int n = 0;
        for (int i = 0; i < k; ++i) {
            classes.emplace_back();
            for (int a = 1 + rng.below(3); a > 0; --a) classes.back().push_back(n++);
        }
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin(60)) e.emplace_back(u, v);
        const MccInstance inst(Digraph(n, e), classes);
        const auto r = multicolored_clique_exact(inst);
        CHECK(r.yes() == naive::has_multicolored_clique(inst));
        if (r.witness) CHECK(is_multicolored_clique(inst, *r.witness));
    }
}

TEST_CASE("dag longest path") {
    CHECK(dag_longest_path(chain(5)).vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(dag_longest_path(Digraph(3)).length() == 0);
    CHECK_THROWS_AS(dag_longest_path(c3), std::invalid_argument);
    naive::SplitMix rng(9);
    for (int t = 0; t < 50; ++t) {
        const auto g = naive::random_dag(rng, 1 + rng.below(15), 25);
        const auto p = dag_longest_path(g);
        CHECK(validate_witness(g, p, false));
        CHECK(p.length() == longest_path_exact(g).witness->length());
    }
}

TEST_CASE("a graph whose only cycle is its shortest") {
    const Digraph g(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    CHECK(longest_cycle_exact(g).witness->length() == static_cast<std::size_t>(*girth(g)));
}
