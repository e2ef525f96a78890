#include "dirham/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "dirham/errors.hpp"
#include "dirham/generators.hpp"
#include "dirham/girth_reduction.hpp"
#include "dirham/mcc_gadget.hpp"
#include "dirham/path_variants.hpp"

namespace dirham {

std::string_view to_string(PipelineStatus s) {
    switch (s) {
        case PipelineStatus::ok: return "ok";
        case PipelineStatus::violation: return "violation";
        case PipelineStatus::budget: return "budget";
    }
    return "?";
}

namespace {

std::string digest_of(const json& j) { return content_digest(j.dump()); }

class Recorder {
public:
    explicit Recorder(PipelineResult& r) : r_(r) {}

    void check(std::string name, bool passed, std::string detail = {}) {
        if (!passed && r_.error.empty()) r_.error = name + (detail.empty() ? "" : ": " + detail);
        r_.checks.push_back({std::move(name), passed, std::move(detail)});
    }

    template <class W>
    void verdict(const std::string& stage, const SolveResult<W>& res) {
        r_.verdicts[stage] = std::string(to_string(res.status));
        if (res.exceeded()) budget_hit_ = true;
        if (res.witness) r_.witnesses[stage] = res.witness->vertices;
    }

    void finish() {
        const bool failed = std::any_of(r_.checks.begin(), r_.checks.end(), [](const auto& c) { return !c.passed; });
        r_.status = failed ? PipelineStatus::violation : budget_hit_ ? PipelineStatus::budget : PipelineStatus::ok;
    }

private:
    PipelineResult& r_;
    bool budget_hit_ = false;
};

void mcc_roundtrip(const RoundtripSpec& spec, const SolverBudget& budget, PipelineResult& r) {
    Recorder rec(r);
    const auto gen = gen_mcc({spec.seed, spec.class_sizes, spec.p, spec.family == "mcc-planted"});
    const auto& inst = gen.instance;
    r.source_digest = digest_of(to_json(inst));
    const auto gg = build_gadget(inst);
    r.target_digests["gadget"] = digest_of(to_json(gg));
    rec.check("dfvs-size", static_cast<int>(gg.dfvs.size()) == gadget_dfvs_size(inst.k()));
    rec.check("dfvs-acyclic", verify_dfvs(gg.graph, gg.dfvs));

    const auto src = multicolored_clique_exact(inst, budget);
    const auto tgt = hamiltonian_cycle(gg.graph, budget);
    rec.verdict("mcc", src);
    rec.verdict("hamcycle", tgt);
    if (gen.plant) rec.check("plant-found", src.yes() || src.exceeded());

    if (src.witness) {
        const auto h = clique_to_hamcycle(gg, *src.witness);
        r.witnesses["hamcycle-from-clique"] = h.vertices;
        rec.check("lifted-cycle-valid", validate_witness(gg.graph, h, true).ok());
        const auto back = hamcycle_to_clique(gg, h);
        rec.check("clique-roundtrip", back == *src.witness);
        const auto report = check_structural_lemmas(gg, h);
        const auto* bad = report.first_failure();
        rec.check("lemmas-on-lifted-cycle", report.all_passed(),
                  bad ? bad->lemma + "(" + std::to_string(bad->i) + "," + std::to_string(bad->j) + ")" : "");
    }
    if (tgt.witness) {
        const auto report = check_structural_lemmas(gg, *tgt.witness);
        const auto* bad = report.first_failure();
        rec.check("lemmas-on-oracle-cycle", report.all_passed(),
                  bad ? bad->lemma + "(" + std::to_string(bad->i) + "," + std::to_string(bad->j) + ")" : "");
        const auto c = hamcycle_to_clique(gg, *tgt.witness);
        r.witnesses["clique-from-hamcycle"] = c.vertices;
        rec.check("extracted-clique", is_multicolored_clique(inst, c));
    }
    if (!src.exceeded() && !tgt.exceeded()) rec.check("verdicts-agree", src.yes() == tgt.yes());
    rec.finish();
}

void hamdfvs_roundtrip(const RoundtripSpec& spec, const SolverBudget& budget, PipelineResult& r) {
    Recorder rec(r);
    const auto gen = gen_digraph_with_dfvs({spec.seed, spec.n, spec.k, spec.p, spec.family == "hamdfvs-planted"});
    const auto& inst = gen.instance;
    r.source_digest = digest_of(to_json(inst));
    const auto gi = build_girth_instance(inst);
    r.target_digests["girth"] = digest_of(to_json(gi));
    const auto lp = build_longest_path_above_girth_instance(gi);
    r.target_digests["longpath"] = digest_of(to_json(lp));
    rec.check("girth-size", gi.graph.vertex_count() == inst.n() * (inst.k() + 1));
    rec.check("girth-value", girth(gi.graph) == inst.n());
    rec.check("longpath-size", lp.path.graph.vertex_count() == inst.n() * (inst.k() + 2));

    const auto src = hamiltonian_cycle(inst.graph(), budget);
    const auto mid = hamiltonian_cycle(gi.graph, budget);
    // Threshold g(k+2) - 1 equals |V| - 1, so a Hamiltonian path decides it.
    const auto end = hamiltonian_path(lp.path.graph, budget);
    rec.verdict("source", src);
    rec.verdict("girth", mid);
    rec.verdict("longpath", end);
    if (gen.plant) rec.check("plant-found", src.yes() || src.exceeded());

    if (src.witness) {
        const auto lifted = lift_hamcycle(gi, *src.witness);
        rec.check("girth-lift-length", static_cast<long long>(lifted.length()) == gi.required_cycle_length());
        rec.check("girth-roundtrip", project_hamcycle(gi, lifted) == *src.witness);
        const auto path = lift_to_long_path(lp, lifted);
        rec.check("longpath-lift-valid", validate_witness(lp.path.graph, path, true).ok());
        rec.check("longpath-roundtrip", normalize_cycle(project_long_path(lp, path)) == normalize_cycle(lifted));
    }
    if (mid.witness) rec.check("girth-project-valid", validate_witness(inst.graph(), project_hamcycle(gi, *mid.witness), true).ok());
    if (end.witness) {
        const auto cyc = project_hamcycle(gi, project_long_path(lp, *end.witness));
        rec.check("longpath-project-valid", validate_witness(inst.graph(), cyc, true).ok());
    }
    if (!src.exceeded() && !mid.exceeded()) rec.check("verdicts-agree-girth", src.yes() == mid.yes());
    if (!src.exceeded() && !end.exceeded()) rec.check("verdicts-agree-longpath", src.yes() == end.yes());
    rec.finish();
}

}  // namespace

PipelineResult run_roundtrip(const RoundtripSpec& spec, const SolverBudget& budget) {
    PipelineResult r;
    r.spec = spec;
    const auto t0 = std::chrono::steady_clock::now();
    const bool mcc = spec.family == "mcc-planted" || spec.family == "mcc-random";
    const bool dfvs = spec.family == "hamdfvs-planted" || spec.family == "hamdfvs-random";
    if (!mcc && !dfvs) throw std::invalid_argument("unknown family: " + spec.family);
    try {
        if (mcc) mcc_roundtrip(spec, budget, r);
        else hamdfvs_roundtrip(spec, budget, r);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const StructuralViolation& e) {
        r.status = PipelineStatus::violation;
        r.error = std::string("structural violation: ") + e.what();
    } catch (const std::logic_error& e) {
        r.status = PipelineStatus::violation;
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<PipelineResult> run_batch(const std::vector<RoundtripSpec>& specs, const SolverBudget& budget,
                                      int jobs) {
    std::vector<PipelineResult> results(specs.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(specs.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                results[i] = run_roundtrip(specs[i], budget);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (!e.empty()) throw std::invalid_argument(e);
    std::sort(results.begin(), results.end(), [](const PipelineResult& a, const PipelineResult& b) {
        return std::tie(a.source_digest, a.spec.family, a.spec.seed) <
               std::tie(b.source_digest, b.spec.family, b.spec.seed);
    });
    return results;
}

json manifest_entry(const PipelineResult& r, bool with_timing) {
    json params = {{"p", r.spec.p}};
    if (r.spec.family.starts_with("mcc")) params["class_sizes"] = r.spec.class_sizes;
    else {
        params["n"] = r.spec.n;
        params["k"] = r.spec.k;
    }
    json checks = json::array();
    for (const auto& c : r.checks) {
        json entry = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    json j = {{"family", r.spec.family},
              {"seed", r.spec.seed},
              {"params", params},
              {"source_digest", r.source_digest},
              {"target_digests", r.target_digests},
              {"verdicts", r.verdicts},
              {"witnesses", r.witnesses},
              {"checks", checks},
              {"status", std::string(to_string(r.status))}};
    if (!r.error.empty()) j["error"] = r.error;
    if (with_timing) j["seconds"] = r.seconds;
    return j;
}

std::string manifest_lines(const std::vector<PipelineResult>& results, bool with_timing) {
    std::string out;
    for (const auto& r : results) out += manifest_entry(r, with_timing).dump() + "\n";
    return out;
}

int exit_code(const std::vector<PipelineResult>& results) {
    int code = 0;
    for (const auto& r : results) {
        if (r.status == PipelineStatus::violation) return 1;
        if (r.status == PipelineStatus::budget) code = 2;
    }
    return code;
}

}  // namespace dirham
