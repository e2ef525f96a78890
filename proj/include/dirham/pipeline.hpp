#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dirham/graph_io.hpp"
#include "dirham/oracles.hpp"

namespace dirham {

// Families: "mcc-planted", "mcc-random" (class_sizes, p) and
// "hamdfvs-planted", "hamdfvs-random" (n, k, p).
struct RoundtripSpec {
    std::string family = "mcc-planted";
    std::uint64_t seed = 0;
    std::vector<int> class_sizes{2, 2};
    double p = 0.5;
    int n = 5;
    int k = 2;
};

enum class PipelineStatus { ok, violation, budget };

std::string_view to_string(PipelineStatus s);

struct PipelineCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PipelineResult {
    RoundtripSpec spec;
    std::string source_digest;
    std::map<std::string, std::string> target_digests;
    std::map<std::string, std::string> verdicts;  // stage -> yes / no / budget
    std::map<std::string, json> witnesses;        // stage -> vertex list
    std::vector<PipelineCheck> checks;
    PipelineStatus status = PipelineStatus::ok;
    std::string error;  // first failing check or lemma predicate
    double seconds = 0.0;
};

// Generates the instance, applies the reduction chain, solves both sides
// with the oracles, maps witnesses in both directions and records every
// check. Throws std::invalid_argument for an unknown family.
PipelineResult run_roundtrip(const RoundtripSpec& spec, const SolverBudget& budget = {});

// Runs the specs on `jobs` threads; results are ordered by source digest,
// then family and seed, regardless of scheduling.
std::vector<PipelineResult> run_batch(const std::vector<RoundtripSpec>& specs, const SolverBudget& budget,
                                      int jobs);

// One JSON object per result. Timing is left out unless asked for, so
// reruns produce byte-identical manifests.
json manifest_entry(const PipelineResult& r, bool with_timing = false);
std::string manifest_lines(const std::vector<PipelineResult>& results, bool with_timing = false);

// 0 when every result is ok, 1 if any violation, otherwise 2 if any budget.
int exit_code(const std::vector<PipelineResult>& results);

}  // namespace dirham
