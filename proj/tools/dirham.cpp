#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirham/dtd.hpp"
#include "dirham/errors.hpp"
#include "dirham/generators.hpp"
#include "dirham/girth_reduction.hpp"
#include "dirham/graph_io.hpp"
#include "dirham/mcc.hpp"
#include "dirham/mcc_gadget.hpp"
#include "dirham/oracles.hpp"
#include "dirham/path_variants.hpp"
#include "dirham/pipeline.hpp"
#include "dirham/wall.hpp"

using namespace dirham;

namespace {

// Exit codes: 0 success / yes, 1 violation / no, 2 budget exceeded,
// 3 malformed input or I/O failure.
constexpr int kInputError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void write_json(const json& j, const std::string& path) { write_text(j.dump(2) + "\n", path); }

std::vector<Vertex> parse_ids(const std::string& csv) {
    std::vector<Vertex> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

SolverBudget make_budget(std::uint64_t nodes, double seconds) {
    SolverBudget b;
    b.node_limit = nodes;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
    b.validate();
    return b;
}

int status_code(SolveStatus s) {
    switch (s) {
        case SolveStatus::yes: return 0;
        case SolveStatus::no: return 1;
        case SolveStatus::budget_exceeded: return 2;
    }
    return 1;
}

// Accepts {"graph": ..., "dfvs": ...} or a bare graph plus --dfvs.
std::pair<Digraph, std::vector<Vertex>> graph_and_set(const json& j, const std::string& ids) {
    if (j.contains("graph")) {
        auto set = ids.empty() && j.contains("dfvs") ? j.at("dfvs").get<std::vector<Vertex>>() : parse_ids(ids);
        return {digraph_from_json(j.at("graph")), set};
    }
    return {digraph_from_json(j), parse_ids(ids)};
}

WallSubdivision wall_from_args(const std::string& input, int order, const std::string& subdivide) {
    if (!input.empty()) return wall_subdivision_from_json(read_json(input));
    if (order < 1) throw InputError("give --order or an input wall file");
    const auto wall = build_wall(order);
    std::vector<int> plan(wall.graph.edge_count(), 0);
    if (!subdivide.empty()) {
        const auto parts = parse_ids(subdivide);
        if (parts.size() != 3) throw InputError("--subdivide expects seed,min,max");
        plan = gen_subdivision_plan({static_cast<std::uint64_t>(parts[0]), parts[1], parts[2]}, order);
    }
    return subdivide_wall(wall, plan);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed Hamiltonicity reductions, oracles and certificates"};
    app.require_subcommand(1);
    int code = 0;

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
    gen->require_subcommand(1);
    std::uint64_t seed = 0;
    std::string out_path, meta_path;
    std::vector<int> sizes{2, 2};
    double p = 0.5;
    int n = 6, k = 2, order = 0, lo = 0, hi = 0;
    bool label = false, planted_ham = false;
    for (const char* family : {"mcc-planted", "mcc-random"}) {
        auto* c = gen->add_subcommand(family, std::string("Multicolored Clique instance (") + family + ")");
        c->add_option("--seed", seed)->required();
        c->add_option("--sizes", sizes, "class sizes")->delimiter(',');
        c->add_option("--p", p, "cross-class edge probability");
        c->add_option("-o,--output", out_path);
        c->add_option("--meta", meta_path, "sidecar metadata file");
        c->add_flag("--label", label, "run the oracle and store its verdict in the metadata");
        c->callback([&, family = std::string(family)] {
            const auto g = gen_mcc({seed, sizes, p, family == "mcc-planted"});
            write_json(to_json(g.instance), out_path);
            if (!meta_path.empty()) {
                json meta = {{"family", family}, {"seed", seed}, {"class_sizes", sizes}, {"p", p}};
                if (g.plant) meta["plant"] = g.plant->vertices;
                if (label) meta["oracle"] = std::string(to_string(multicolored_clique_exact(g.instance).status));
                write_json(meta, meta_path);
            }
        });
    }
    {
        auto* c = gen->add_subcommand("digraph-with-dfvs", "Digraph with a planted DFVS (the last k ids)");
        c->add_option("--seed", seed)->required();
        c->add_option("--n", n);
        c->add_option("--k", k);
        c->add_option("--p", p);
        c->add_flag("--planted-hamiltonian", planted_ham);
        c->add_option("-o,--output", out_path);
        c->add_option("--meta", meta_path);
        c->add_flag("--label", label);
        c->callback([&] {
            const auto g = gen_digraph_with_dfvs({seed, n, k, p, planted_ham});
            write_json(to_json(g.instance), out_path);
            if (!meta_path.empty()) {
                json meta = {{"family", "digraph-with-dfvs"}, {"seed", seed}, {"n", n}, {"k", k}, {"p", p},
                             {"planted_hamiltonian", planted_ham}};
                if (g.plant) meta["plant"] = g.plant->vertices;
                if (label) meta["oracle"] = std::string(to_string(hamiltonian_cycle(g.instance.graph()).status));
                write_json(meta, meta_path);
            }
        });
    }
    {
        auto* c = gen->add_subcommand("wall-subdivision-plan", "Per-edge expansion counts for a wall");
        c->add_option("--seed", seed)->required();
        c->add_option("--order", order)->required();
        c->add_option("--min", lo);
        c->add_option("--max", hi);
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            write_json({{"order", order}, {"plan", gen_subdivision_plan({seed, lo, hi}, order)}}, out_path);
        });
    }

    // reduce ---------------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
    reduce->require_subcommand(1);
    std::string in_path, set_ids;
    Vertex vertex = 0;
    {
        auto* c = reduce->add_subcommand("mcc-to-hamdfvs", "Multicolored Clique -> Hamiltonian Cycle with DFVS");
        c->add_option("-i,--input", in_path)->required();
        c->add_option("-o,--output", out_path);
        c->callback([&] { write_json(to_json(build_gadget(mcc_from_json(read_json(in_path)))), out_path); });
    }
    {
        auto* c = reduce->add_subcommand("hamdfvs-to-girth", "Hamiltonian Cycle with DFVS -> Longest Cycle Above Girth");
        c->add_option("-i,--input", in_path)->required();
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            write_json(to_json(build_girth_instance(dfvs_instance_from_json(read_json(in_path)))), out_path);
        });
    }
    {
        auto* c = reduce->add_subcommand("cycle-to-path", "Split one vertex into a source and a sink");
        c->add_option("-i,--input", in_path)->required();
        c->add_option("--vertex", vertex)->required();
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            const auto pi = cycle_to_path_instance(digraph_from_json(read_json(in_path)), vertex);
            write_json({{"graph", to_json(pi.graph)}, {"split", to_json(pi.split)}}, out_path);
        });
    }
    {
        auto* c = reduce->add_subcommand("hamdfvs-to-longpath-girth",
                                         "Hamiltonian Cycle with DFVS -> Longest Path Above Girth");
        c->add_option("-i,--input", in_path)->required();
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            const auto gi = build_girth_instance(dfvs_instance_from_json(read_json(in_path)));
            write_json(to_json(build_longest_path_above_girth_instance(gi)), out_path);
        });
    }
    {
        auto* c = reduce->add_subcommand("dfvs-to-dfas", "Split the given vertices into arcs");
        c->add_option("-i,--input", in_path)->required();
        c->add_option("--dfvs", set_ids, "comma-separated ids (default: the input's dfvs)");
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            auto [g, s] = graph_and_set(read_json(in_path), set_ids);
            write_json(to_json(dfvs_to_dfas(g, s)), out_path);
        });
    }
    {
        auto* c = reduce->add_subcommand("additive-girth", "Instances for a path of length girth + k");
        c->add_option("-i,--input", in_path)->required();
        c->add_option("--k", k)->required();
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            json list = json::array();
            for (const auto& ai : build_additive_instances(digraph_from_json(read_json(in_path)), k))
                list.push_back(to_json(ai));
            write_json({{"k", k}, {"instances", list}}, out_path);
        });
    }

    // solve ----------------------------------------------------------------
    std::string problem = "hamcycle";
    std::uint64_t budget_nodes = SolverBudget{}.node_limit;
    double budget_seconds = 300.0;
    long long at_least = -1;
    {
        auto* c = app.add_subcommand("solve", "Run an exact oracle");
        c->add_option("--problem", problem)->check(CLI::IsMember({"hamcycle", "hampath", "longpath", "longcycle", "mcc"}));
        c->add_option("-i,--input", in_path)->required();
        c->add_option("--budget-nodes", budget_nodes);
        c->add_option("--budget-seconds", budget_seconds);
        c->add_option("--at-least", at_least, "length threshold for longpath/longcycle");
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            const auto b = make_budget(budget_nodes, budget_seconds);
            const auto j = read_json(in_path);
            json result;
            SolveStatus status;
            auto emit = [&](const auto& res) {
                status = res.status;
                if (res.witness && at_least >= 0 && static_cast<long long>(res.witness->length()) < at_least)
                    status = SolveStatus::no;
                result = {{"status", std::string(to_string(status))}, {"nodes", res.nodes}};
                if (res.witness) result["length"] = res.witness->length();
                if (res.witness && status == SolveStatus::yes) result["witness"] = res.witness->vertices;
            };
            if (problem == "mcc") {
                const auto res = multicolored_clique_exact(mcc_from_json(j), b);
                status = res.status;
                result = {{"status", std::string(to_string(status))}, {"nodes", res.nodes}};
                if (res.witness) result["witness"] = res.witness->vertices;
            } else {
                const auto g = digraph_from_json(j.contains("graph") ? j.at("graph") : j);
                if (problem == "hamcycle") emit(hamiltonian_cycle(g, b));
                else if (problem == "hampath") emit(hamiltonian_path(g, b));
                else if (problem == "longpath") emit(longest_path_exact(g, b));
                else emit(longest_cycle_exact(g, b));
            }
            write_json(result, out_path);
            code = status_code(status);
        });
    }

    // witness map ------------------------------------------------------------
    std::string reduction, direction = "forward", witness_path;
    {
        auto* w = app.add_subcommand("witness", "Witness utilities");
        w->require_subcommand(1);
        auto* c = w->add_subcommand("map", "Map a witness across a reduction");
        c->add_option("--reduction", reduction)
            ->required()
            ->check(CLI::IsMember({"mcc-to-hamdfvs", "hamdfvs-to-girth", "cycle-to-path", "hamdfvs-to-longpath-girth",
                                   "dfvs-to-dfas"}));
        c->add_option("--direction", direction)->check(CLI::IsMember({"forward", "backward"}));
        c->add_option("-i,--source", in_path, "source instance of the reduction")->required();
        c->add_option("--witness", witness_path)->required();
        c->add_option("--vertex", vertex);
        c->add_option("--dfvs", set_ids);
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            const auto src = read_json(in_path);
            const auto ids = witness_vertices_from_json(read_json(witness_path));
            const bool fwd = direction == "forward";
            json result;
            if (reduction == "mcc-to-hamdfvs") {
                const auto gg = build_gadget(mcc_from_json(src));
                if (fwd) result = to_json(clique_to_hamcycle(gg, CliqueWitness{ids}));
                else result = to_json(hamcycle_to_clique(gg, CycleWitness{ids}));
            } else if (reduction == "hamdfvs-to-girth") {
                const auto gi = build_girth_instance(dfvs_instance_from_json(src));
                result = to_json(fwd ? lift_hamcycle(gi, CycleWitness{ids}) : project_hamcycle(gi, CycleWitness{ids}));
            } else if (reduction == "cycle-to-path") {
                const auto g = digraph_from_json(src.contains("graph") ? src.at("graph") : src);
                const auto pi = cycle_to_path_instance(g, vertex);
                if (fwd) result = to_json(lift_cycle_to_path(pi, g, CycleWitness{ids}));
                else result = to_json(project_path_to_cycle(pi, PathWitness{ids}));
            } else if (reduction == "hamdfvs-to-longpath-girth") {
                const auto gi = build_girth_instance(dfvs_instance_from_json(src));
                const auto lp = build_longest_path_above_girth_instance(gi);
                if (fwd) result = to_json(lift_to_long_path(lp, lift_hamcycle(gi, CycleWitness{ids})));
                else result = to_json(project_hamcycle(gi, project_long_path(lp, PathWitness{ids})));
            } else {
                auto [g, s] = graph_and_set(src, set_ids);
                const auto d = dfvs_to_dfas(g, s);
                if (fwd) result = to_json(lift_cycle_to_dfas(d, CycleWitness{ids}));
                else result = to_json(project_cycle_from_dfas(d, g.vertex_count(), CycleWitness{ids}));
            }
            write_json(result, out_path);
        });
    }

    // verify -----------------------------------------------------------------
    std::string kind = "cycle", graph_path;
    bool hamiltonian = false;
    {
        auto* v = app.add_subcommand("verify", "Check certificates");
        v->require_subcommand(1);
        auto* cw = v->add_subcommand("witness", "Validate a cycle or path witness");
        cw->add_option("--graph", graph_path)->required();
        cw->add_option("--witness", witness_path)->required();
        cw->add_option("--kind", kind)->check(CLI::IsMember({"cycle", "path"}));
        cw->add_flag("--hamiltonian", hamiltonian);
        cw->callback([&] {
            const auto gj = read_json(graph_path);
            const auto g = digraph_from_json(gj.contains("graph") ? gj.at("graph") : gj);
            const auto ids = witness_vertices_from_json(read_json(witness_path));
            const auto check = kind == "cycle" ? validate_witness(g, CycleWitness{ids}, hamiltonian)
                                               : validate_witness(g, PathWitness{ids}, hamiltonian);
            json r = {{"valid", check.ok()}, {"reason", std::string(to_string(check.error))}};
            if (!check.ok()) r["position"] = check.position;
            write_json(r, out_path);
            code = check.ok() ? 0 : 1;
        });
        auto* cd = v->add_subcommand("dfvs", "Check that removing a set leaves a DAG");
        cd->add_option("--graph", graph_path)->required();
        cd->add_option("--dfvs", set_ids);
        cd->callback([&] {
            auto [g, s] = graph_and_set(read_json(graph_path), set_ids);
            const bool ok = verify_dfvs(g, s);
            write_json({{"valid", ok}, {"size", s.size()}}, out_path);
            code = ok ? 0 : 1;
        });
        auto* cl = v->add_subcommand("lemmas", "Structural predicates of a gadget Hamiltonian cycle");
        cl->add_option("--instance", in_path, "Multicolored Clique instance")->required();
        cl->add_option("--witness", witness_path)->required();
        cl->add_option("-o,--output", out_path);
        cl->callback([&] {
            const auto gg = build_gadget(mcc_from_json(read_json(in_path)));
            const auto report = check_structural_lemmas(gg, CycleWitness{witness_vertices_from_json(read_json(witness_path))});
            json outcomes = json::array();
            for (const auto& o : report.outcomes)
                outcomes.push_back({{"lemma", o.lemma}, {"i", o.i}, {"j", o.j}, {"passed", o.passed}, {"detail", o.detail}});
            json r = {{"applicable", report.applicable}, {"all_passed", report.all_passed()}, {"outcomes", outcomes}};
            if (!report.applicable) r["rejection"] = report.rejection;
            write_json(r, out_path);
            code = report.all_passed() ? 0 : 1;
        });
    }

    // wall -------------------------------------------------------------------
    std::string subdivide, dot_path;
    int cycle_index = 0;
    {
        auto* w = app.add_subcommand("wall", "Cylindrical walls and long paths");
        w->require_subcommand(1);
        auto* b = w->add_subcommand("build", "Build a (subdivided) cylindrical wall");
        b->add_option("--order", order)->required();
        b->add_option("--subdivide", subdivide, "seed,min,max");
        b->add_option("-o,--output", out_path);
        b->add_option("--dot", dot_path);
        b->callback([&] {
            const auto h = wall_from_args("", order, subdivide);
            write_json(to_json(h), out_path);
            if (!dot_path.empty()) write_text(wall_to_dot(h), dot_path);
        });
        auto* x = w->add_subcommand("extract-path", "Path of length at least girth * k");
        x->add_option("-i,--input", in_path);
        x->add_option("--order", order);
        x->add_option("--subdivide", subdivide);
        x->add_option("-o,--output", out_path);
        x->add_option("--dot", dot_path);
        x->callback([&] {
            const auto h = wall_from_args(in_path, order, subdivide);
            const auto r = extract_long_path(h);
            write_json(to_json(r), out_path);
            if (!dot_path.empty()) write_text(wall_to_dot(h, &r.path), dot_path);
            code = r.meets_bound() ? 0 : 1;
        });
        auto* s = w->add_subcommand("segments", "Segments of one wall cycle");
        s->add_option("-i,--input", in_path);
        s->add_option("--order", order);
        s->add_option("--subdivide", subdivide);
        s->add_option("--cycle", cycle_index, "0-based, innermost first")->required();
        s->add_option("-o,--output", out_path);
        s->callback([&] {
            const auto h = wall_from_args(in_path, order, subdivide);
            json segs = json::array();
            for (const auto& seg : decompose_segments(h, cycle_index))
                segs.push_back({{"vertices", seg.vertices}, {"length", seg.length()}, {"entry", seg.entry_candidates}});
            const auto best = shortest_segment(h, cycle_index);
            write_json({{"cycle", cycle_index},
                        {"cycle_length", h.host_cycle(cycle_index).size()},
                        {"segments", segs},
                        {"shortest_start", best.segment.front()},
                        {"complement_length", best.complement_length()}},
                       out_path);
        });
        auto* ww = w->add_subcommand("winwin", "Decide a path of length girth * k");
        std::string cert_path;
        ww->add_option("--graph", graph_path)->required();
        ww->add_option("--k", k)->required();
        ww->add_option("--certificate", cert_path, "{order, plan, embedding}");
        ww->add_option("--budget-nodes", budget_nodes);
        ww->add_option("--budget-seconds", budget_seconds);
        ww->add_option("-o,--output", out_path);
        ww->callback([&] {
            const auto g = digraph_from_json(read_json(graph_path));
            std::optional<WallCertificate> cert;
            if (!cert_path.empty()) cert = wall_certificate_from_json(read_json(cert_path));
            const auto r = winwin_longest_path(g, k, cert ? &*cert : nullptr, make_budget(budget_nodes, budget_seconds));
            json j = {{"status", std::string(to_string(r.status))}, {"girth", r.girth}, {"required", r.required},
                      {"used_certificate", r.used_certificate}};
            if (r.witness) j["witness"] = r.witness->vertices;
            write_json(j, out_path);
            code = status_code(r.status);
        });
    }

    // dtd --------------------------------------------------------------------
    std::string dec_path;
    {
        auto* d = app.add_subcommand("dtd", "Directed tree decompositions");
        d->require_subcommand(1);
        auto* v = d->add_subcommand("verify", "Check a decomposition against a graph");
        v->add_option("--graph", graph_path)->required();
        v->add_option("--decomposition", dec_path)->required();
        v->add_option("-o,--output", out_path);
        v->callback([&] {
            const auto report = verify_dtd(digraph_from_json(read_json(graph_path)), dtd_from_json(read_json(dec_path)));
            write_json({{"valid", report.valid}, {"violations", report.violations}}, out_path);
            code = report.valid ? 0 : 1;
        });
        auto* w = d->add_subcommand("width", "Width of a valid decomposition");
        w->add_option("--graph", graph_path)->required();
        w->add_option("--decomposition", dec_path)->required();
        w->add_option("-o,--output", out_path);
        w->callback([&] {
            const auto g = digraph_from_json(read_json(graph_path));
            const auto dec = dtd_from_json(read_json(dec_path));
            const auto report = verify_dtd(g, dec);
            if (!report.valid) {
                write_json({{"valid", false}, {"violations", report.violations}}, out_path);
                code = 1;
                return;
            }
            write_json({{"valid", true}, {"width", dtd_width(dec)}}, out_path);
        });
        auto* h = d->add_subcommand("dag", "Width-0 decomposition of a DAG");
        h->add_option("--graph", graph_path)->required();
        h->add_option("-o,--output", out_path);
        h->callback([&] { write_json(to_json(dag_decomposition(digraph_from_json(read_json(graph_path)))), out_path); });
    }

    // roundtrip ----------------------------------------------------------------
    std::string family = "mcc-planted", manifest_path;
    int count = 1, jobs = 1;
    bool timing = false;
    {
        auto* c = app.add_subcommand("roundtrip", "Generate, reduce, solve and map witnesses");
        c->add_option("--family", family)
            ->check(CLI::IsMember({"mcc-planted", "mcc-random", "hamdfvs-planted", "hamdfvs-random"}));
        c->add_option("--seed", seed, "first seed");
        c->add_option("--count", count, "instances with seeds seed, seed+1, ...");
        c->add_option("--jobs", jobs);
        c->add_option("--sizes", sizes)->delimiter(',');
        c->add_option("--p", p);
        c->add_option("--n", n);
        c->add_option("--k", k);
        c->add_option("--budget-nodes", budget_nodes);
        c->add_option("--budget-seconds", budget_seconds);
        c->add_option("--manifest", manifest_path, "JSON-lines output (default stdout)");
        c->add_flag("--timing", timing, "include wall-clock seconds in the manifest");
        c->callback([&] {
            std::vector<RoundtripSpec> specs;
            for (int a = 0; a < count; ++a) specs.push_back({family, seed + static_cast<std::uint64_t>(a), sizes, p, n, k});
            const auto results = run_batch(specs, make_budget(budget_nodes, budget_seconds), jobs);
            write_text(manifest_lines(results, timing), manifest_path);
            for (const auto& r : results)
                if (r.status != PipelineStatus::ok)
                    std::cerr << r.spec.family << " seed " << r.spec.seed << ": " << to_string(r.status)
                              << (r.error.empty() ? "" : " (" + r.error + ")") << "\n";
            code = exit_code(results);
        });
    }

    // export -------------------------------------------------------------------
    std::string type = "graph", format = "dot";
    {
        auto* c = app.add_subcommand("export", "Canonical JSON or DOT rendering");
        c->add_option("-i,--input", in_path)->required();
        c->add_option("--type", type, "graph, dfvs, mcc, gadget (from an mcc instance), wall")
            ->check(CLI::IsMember({"graph", "dfvs", "mcc", "gadget", "wall"}));
        c->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
        c->add_option("--witness", witness_path, "cycle/path to overlay");
        c->add_option("--kind", kind)->check(CLI::IsMember({"cycle", "path"}));
        c->add_option("-o,--output", out_path);
        c->callback([&] {
            const auto j = read_json(in_path);
            std::vector<Vertex> ids;
            if (!witness_path.empty()) ids = witness_vertices_from_json(read_json(witness_path));
            DotStyle style;
            if (!witness_path.empty())
                style.marked_edges = kind == "cycle" ? witness_edges(CycleWitness{ids}) : witness_edges(PathWitness{ids});
            if (type == "graph") {
                const auto g = digraph_from_json(j);
                write_text(format == "json" ? to_json(g).dump(2) + "\n" : to_dot(g, style), out_path);
            } else if (type == "dfvs") {
                const auto inst = dfvs_instance_from_json(j);
                style.highlighted.insert(inst.dfvs().begin(), inst.dfvs().end());
                write_text(format == "json" ? to_json(inst).dump(2) + "\n" : to_dot(inst.graph(), style), out_path);
            } else if (type == "mcc") {
                const auto inst = mcc_from_json(j);
                write_text(format == "json" ? to_json(inst).dump(2) + "\n" : to_dot(inst.graph(), style), out_path);
            } else if (type == "gadget") {
                const auto gg = build_gadget(mcc_from_json(j));
                const CycleWitness overlay{ids};
                write_text(format == "json" ? to_json(gg).dump(2) + "\n"
                                            : gadget_to_dot(gg, ids.empty() ? nullptr : &overlay),
                           out_path);
            } else {
                const auto h = wall_subdivision_from_json(j);
                const PathWitness overlay{ids};
                write_text(format == "json" ? to_json(h).dump(2) + "\n" : wall_to_dot(h, ids.empty() ? nullptr : &overlay),
                           out_path);
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const StructuralViolation& e) {
        std::cerr << "structural violation: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
