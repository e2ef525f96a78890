#include <doctest.h>

#include <set>

#include "dirham/generators.hpp"
#include "support/naive.hpp"

using namespace dirham;

TEST_CASE("rng is mt19937_64 with fixed derivations") {
    Rng a(42);
    std::mt19937_64 ref(42);
    CHECK(a.next() == ref());
    Rng b(5489);
    // First output of the reference engine's default seed.
    CHECK(b.next() == 14514284786278117030ULL);
    Rng c(1);
    for (int t = 0; t < 1000; ++t) {
        const auto x = c.uniform(-3, 3);
        CHECK(x >= -3);
        CHECK(x <= 3);
        const double u = c.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Rng d(7), e(7);
    std::mt19937_64 raw(7);
    CHECK(d.unit() == static_cast<double>(raw() >> 11) / 9007199254740992.0);
    std::vector<int> xs{1, 2, 3, 4, 5};
    e.shuffle(xs);
    CHECK(std::set<int>(xs.begin(), xs.end()) == std::set<int>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(Rng(0).uniform(2, 1), std::invalid_argument);
}

TEST_CASE("uniform covers the range evenly") {
    Rng r(3);
    std::vector<int> counts(6, 0);
    for (int t = 0; t < 60000; ++t) ++counts[r.uniform(0, 5)];
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
}

TEST_CASE("mcc generator") {
    const auto one = gen_mcc({9, {1, 1}, 0.0, true});
    CHECK(one.instance.graph().edge_count() == 2);  // one undirected edge, stored both ways
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = gen_mcc({seed, {2, 3, 2}, 0.3, true});
        REQUIRE(g.plant);
        CHECK(is_multicolored_clique(g.instance, *g.plant));
        CHECK(multicolored_clique_exact(g.instance).yes());
        const auto r = gen_mcc({seed, {2, 2}, 0.0, false});
        CHECK(multicolored_clique_exact(r.instance).no());
        CHECK_FALSE(naive::has_multicolored_clique(r.instance));
    }
    CHECK(to_json(gen_mcc({5, {2, 2}, 0.5, true}).instance) == to_json(gen_mcc({5, {2, 2}, 0.5, true}).instance));
    CHECK_THROWS_AS(gen_mcc({1, {2}, 0.5, false}), std::invalid_argument);
    CHECK_THROWS_AS(gen_mcc({1, {2, 0}, 0.5, false}), std::invalid_argument);
    CHECK_THROWS_AS(gen_mcc({1, {2, 2}, 1.5, false}), std::invalid_argument);
}

TEST_CASE("dfvs generator") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = gen_digraph_with_dfvs({seed, 6, 2, 0.3, true});
        REQUIRE(g.plant);
        CHECK(validate_witness(g.instance.graph(), *g.plant, true));
        CHECK(hamiltonian_cycle(g.instance.graph()).yes());
        CHECK(g.instance.dfvs() == std::vector<Vertex>{4, 5});
        CHECK(verify_dfvs(g.instance.graph(), g.instance.dfvs()));
    }
    const auto all = gen_digraph_with_dfvs({1, 4, 4, 0.9, false});
    CHECK(verify_dfvs(all.instance.graph(), all.instance.dfvs()));
    CHECK_THROWS_AS(gen_digraph_with_dfvs({1, 3, 4, 0.5, false}), std::invalid_argument);
}

TEST_CASE("subdivision plans") {
    const auto zero = gen_subdivision_plan({1, 0, 0}, 3);
    CHECK(std::all_of(zero.begin(), zero.end(), [](int c) { return c == 0; }));
    const auto ones = gen_subdivision_plan({1, 1, 1}, 3);
    CHECK(std::all_of(ones.begin(), ones.end(), [](int c) { return c == 1; }));
    const auto a = gen_subdivision_plan({8, 0, 3}, 5), b = gen_subdivision_plan({8, 0, 3}, 5);
    CHECK(a == b);
    CHECK(std::set<int>(a.begin(), a.end()) == std::set<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(gen_subdivision_plan({1, 2, 1}, 3), std::invalid_argument);
}

TEST_CASE("random digraph is reproducible") {
    CHECK(gen_random_digraph(4, 8, 0.3) == gen_random_digraph(4, 8, 0.3));
    CHECK(gen_random_digraph(4, 8, 0.0).edge_count() == 0);
    CHECK(gen_random_digraph(4, 5, 1.0).edge_count() == 20);
}
