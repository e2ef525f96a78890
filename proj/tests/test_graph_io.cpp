#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dirham/graph_io.hpp"
#include "dirham/mcc_gadget.hpp"
#include "dirham/wall.hpp"

using namespace dirham;

namespace {

// Compares against tests/data/<name>; set DIRHAM_UPDATE_SNAPSHOTS=1 to rewrite.
void check_snapshot(const std::string& name, const std::string& text) {
    const std::string path = std::string(DIRHAM_TEST_DATA) + "/" + name;
    if (std::getenv("DIRHAM_UPDATE_SNAPSHOTS")) {
        std::ofstream(path) << text;
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing snapshot " << path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == text);
}

MccInstance toy_mcc() {
    // Classes {0}, {1}; one cross edge.
    return MccInstance(Digraph(2, std::vector<Edge>{{0, 1}}), {{0}, {1}});
}

}  // namespace

TEST_CASE("empty graph serializes minimally") {
    const auto j = to_json(Digraph(0));
    CHECK(j.dump() == R"({"edges":[],"n":0})");
    CHECK(digraph_from_json(j) == Digraph(0));
}

TEST_CASE("graph json round trip keeps labels") {
    Digraph g(3, std::vector<Edge>{{2, 0}, {0, 1}}, {{1, "mid"}});
    const auto j = to_json(g);
    CHECK(j.at("edges") == json::parse("[[0,1],[2,0]]"));
    const auto back = digraph_from_json(j);
    CHECK(back == g);
    CHECK(back.label(1) == "mid");
}

TEST_CASE("malformed graph json is rejected") {
    CHECK_THROWS(digraph_from_json(json::parse(R"({"n": 2, "edges": [[0, 2]]})")));
    CHECK_THROWS(digraph_from_json(json::parse(R"({"edges": []})")));
    CHECK_THROWS(digraph_from_json(json::parse(R"({"n": 2, "edges": [[0]]})")));
}

TEST_CASE("witness json accepts both shapes") {
    CHECK(witness_vertices_from_json(json::parse("[2,0,1]")) == std::vector<Vertex>{2, 0, 1});
    CHECK(witness_vertices_from_json(json::parse(R"({"vertices":[1]})")) == std::vector<Vertex>{1});
}

TEST_CASE("mcc json round trip") {
    const auto inst = toy_mcc();
    const auto back = mcc_from_json(to_json(inst));
    CHECK(back.classes() == inst.classes());
    CHECK(back.graph() == inst.graph());
}

TEST_CASE("content digest is FNV-1a 64") {
    CHECK(content_digest("") == "cbf29ce484222325");
    CHECK(content_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("dot snapshots") {
    const Digraph c3(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
    DotStyle style;
    style.marked_edges = witness_edges(CycleWitness{{0, 1, 2}});
    check_snapshot("triangle_cycle.dot", to_dot(c3, style));

    const auto gg = build_gadget(toy_mcc());
    check_snapshot("gadget_k2.dot", gadget_to_dot(gg));
    const auto h = clique_to_hamcycle(gg, CliqueWitness{{0, 1}});
    check_snapshot("gadget_k2_cycle.dot", gadget_to_dot(gg, &h));

    const auto w = subdivide_wall(build_wall(3), std::vector<int>(build_wall(3).graph.edge_count(), 0));
    const auto x = extract_long_path(w);
    check_snapshot("wall3_path.dot", wall_to_dot(w, &x.path));
}
