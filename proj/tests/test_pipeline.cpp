#include <doctest.h>

#include "dirham/pipeline.hpp"

using namespace dirham;

namespace {

std::vector<RoundtripSpec> specs(const std::string& family, int count) {
    std::vector<RoundtripSpec> out;
    for (int s = 0; s < count; ++s) {
        RoundtripSpec r;
        r.family = family;
        r.seed = static_cast<std::uint64_t>(s);
        r.class_sizes = {1, 2};
        r.n = 5;
        r.k = 2;
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("planted clique round trip agrees") {
    RoundtripSpec s;
    s.family = "mcc-planted";
    s.seed = 3;
    s.class_sizes = {1, 1};
    const auto r = run_roundtrip(s);
    CHECK(r.status == PipelineStatus::ok);
    CHECK(r.verdicts.at("mcc") == "yes");
    CHECK(r.verdicts.at("hamcycle") == "yes");
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("edgeless random instance is no on both sides") {
    RoundtripSpec s;
    s.family = "mcc-random";
    s.p = 0.0;
    const auto r = run_roundtrip(s);
    CHECK(r.status == PipelineStatus::ok);
    CHECK(r.verdicts.at("mcc") == "no");
    CHECK(r.verdicts.at("hamcycle") == "no");
}

TEST_CASE("hamiltonian dfvs chain agrees") {
    for (const char* family : {"hamdfvs-planted", "hamdfvs-random"}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            RoundtripSpec s;
            s.family = family;
            s.seed = seed;
            const auto r = run_roundtrip(s);
            CHECK_MESSAGE(r.status == PipelineStatus::ok, r.error);
            CHECK(r.verdicts.at("source") == r.verdicts.at("girth"));
            CHECK(r.verdicts.at("source") == r.verdicts.at("longpath"));
        }
    }
}

TEST_CASE("unknown family is an input error") {
    RoundtripSpec s;
    s.family = "nope";
    CHECK_THROWS_AS(run_roundtrip(s), std::invalid_argument);
}

TEST_CASE("budget overrun is reported as budget") {
    RoundtripSpec s;
    s.family = "mcc-planted";
    s.class_sizes = {2, 2};
    SolverBudget b;
    b.node_limit = 1;
    const auto r = run_roundtrip(s, b);
    CHECK(r.status == PipelineStatus::budget);
    CHECK(exit_code({r}) == 2);
}

TEST_CASE("batches are deterministic regardless of thread count") {
    auto all = specs("mcc-random", 6);
    const auto more = specs("hamdfvs-random", 4);
    all.insert(all.end(), more.begin(), more.end());
    const auto one = manifest_lines(run_batch(all, {}, 1));
    const auto four = manifest_lines(run_batch(all, {}, 4));
    CHECK(one == four);
    CHECK(one == manifest_lines(run_batch(all, {}, 3)));
    CHECK(one.find("seconds") == std::string::npos);
    CHECK(manifest_entry(run_roundtrip(all[0]), true).contains("seconds"));
}

TEST_CASE("exit code priorities") {
    PipelineResult ok, bad, slow;
    bad.status = PipelineStatus::violation;
    slow.status = PipelineStatus::budget;
    CHECK(exit_code({ok}) == 0);
    CHECK(exit_code({ok, slow}) == 2);
    CHECK(exit_code({slow, bad}) == 1);
}
