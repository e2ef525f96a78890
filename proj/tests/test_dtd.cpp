#include <doctest.h>

#include "dirham/dtd.hpp"
#include "support/naive.hpp"

using namespace dirham;

namespace {

Digraph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Digraph(n, e);
}

DirectedTreeDecomposition split_cycle(std::vector<Vertex> guard) {
    DirectedTreeDecomposition d;
    d.root = 0;
    d.parent = {-1, 0};
    d.beta = {{0, 1, 2}, {3, 4, 5}};
    d.gamma = {{}, std::move(guard)};
    return d;
}

// Brute force: the decomposition is valid iff no guarded tree edge is
// crossed by a closed walk avoiding its guard.
bool naive_valid(const Digraph& g, const DirectedTreeDecomposition& d) {
    const int n = g.vertex_count(), t = d.node_count();
    for (int c = 0; c < t; ++c) {
        if (d.parent[c] < 0) continue;
        std::vector<char> below(t, 0);
        for (int x = 0; x < t; ++x)
            for (int y = x; y >= 0; y = d.parent[y])
                if (y == c) below[x] = 1;
        std::vector<char> in_a(n, 0), removed(n, 0);
        for (int x = 0; x < t; ++x)
            if (below[x])
                for (Vertex v : d.beta[x]) in_a[v] = 1;
        for (Vertex v : d.gamma[c]) removed[v] = 1;
        if (naive::closed_walk_meets_both(g, removed, in_a)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("dag decomposition is valid with width zero") {
    naive::SplitMix rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto g = naive::random_dag(rng, 1 + rng.below(8), 40);
        const auto d = dag_decomposition(g);
        CHECK(verify_dtd(g, d).valid);
        CHECK(dtd_width(g, d) == 0);
    }
    const auto empty = dag_decomposition(Digraph(0));
    CHECK(empty.node_count() == 1);
    CHECK(verify_dtd(Digraph(0), empty).valid);
    CHECK_THROWS_AS(dag_decomposition(cycle_graph(3)), std::invalid_argument);
}

TEST_CASE("split cycle needs a guard") {
    const auto g = cycle_graph(6);
    const auto bad = split_cycle({});
    const auto report = verify_dtd(g, bad);
    CHECK_FALSE(report.valid);
    CHECK_FALSE(report.violations.empty());
    CHECK_THROWS_AS(dtd_width(g, bad), std::invalid_argument);

    const auto good = split_cycle({0});
    CHECK(verify_dtd(g, good).valid);
    // Gamma(child) = {3, 4, 5} + guard {0}.
    CHECK(dtd_width(g, good) == 3);
    CHECK(dtd_width(good) == 3);
}

TEST_CASE("single bag has width n - 1") {
    DirectedTreeDecomposition d;
    d.parent = {-1};
    d.beta = {{0, 1, 2, 3, 4}};
    d.gamma = {{}};
    CHECK(verify_dtd(cycle_graph(5), d).valid);
    CHECK(dtd_width(cycle_graph(5), d) == 4);
}

TEST_CASE("shape and partition errors") {
    const auto g = cycle_graph(3);
    DirectedTreeDecomposition missing;
    missing.parent = {-1};
    missing.beta = {{0, 1}};
    missing.gamma = {{}};
    CHECK_FALSE(verify_dtd(g, missing).valid);

    DirectedTreeDecomposition twice;
    twice.parent = {-1, 0};
    twice.beta = {{0, 1, 2}, {2}};
    twice.gamma = {{}, {}};
    CHECK_FALSE(verify_dtd(g, twice).valid);

    DirectedTreeDecomposition loop;
    loop.root = 0;
    loop.parent = {-1, 2, 1};
    loop.beta = {{0}, {1}, {2}};
    loop.gamma = {{}, {}, {}};
    CHECK_FALSE(verify_dtd(g, loop).valid);
    CHECK_THROWS_AS(dtd_width(loop), std::invalid_argument);
}

TEST_CASE("verifier agrees with the closed-walk oracle") {
    naive::SplitMix rng(99);
    int valid = 0, invalid = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + rng.below(7);
        const auto g = naive::random_digraph(rng, n, 15 + rng.below(30));
        const int nodes = 1 + rng.below(4);
        DirectedTreeDecomposition d;
        d.parent.assign(nodes, -1);
        for (int x = 1; x < nodes; ++x) d.parent[x] = rng.below(x);
        d.beta.assign(nodes, {});
        d.gamma.assign(nodes, {});
        for (Vertex v = 0; v < n; ++v) d.beta[rng.below(nodes)].push_back(v);
        for (int x = 1; x < nodes; ++x)
            for (Vertex v = 0; v < n; ++v)
                if (rng.coin(25)) d.gamma[x].push_back(v);
        const bool expect = naive_valid(g, d);
        CHECK(verify_dtd(g, d).valid == expect);
        (expect ? valid : invalid)++;
    }
    CHECK(valid > 20);
    CHECK(invalid > 20);
}

TEST_CASE("json round trip with renumbered nodes") {
    const auto j = json::parse(R"({"nodes": [10, 20], "root": 10, "parent": {"20": 10},
        "beta": {"10": [0, 1, 2], "20": [3, 4, 5]}, "gamma": {"10->20": [0]}})");
    const auto d = dtd_from_json(j);
    CHECK(d.node_count() == 2);
    CHECK(d.root == 0);
    CHECK(d.parent[1] == 0);
    CHECK(d.gamma[1] == std::vector<Vertex>{0});
    CHECK(verify_dtd(cycle_graph(6), d).valid);
    const auto again = dtd_from_json(to_json(d));
    CHECK(again.beta == d.beta);
    CHECK(again.gamma == d.gamma);
    CHECK(again.parent == d.parent);
}
