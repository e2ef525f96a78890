#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dirham/digraph.hpp"
#include "dirham/girth_reduction.hpp"
#include "dirham/mcc.hpp"

namespace dirham {

// std::mt19937_64 seeded with the 64-bit seed directly. Ranges and doubles
// are derived by hand (rejection sampling, top 53 bits) so that output does
// not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    // Uniform double in [0, 1).
    double unit();
    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

struct MccGenSpec {
    std::uint64_t seed = 0;
    std::vector<int> class_sizes;
    double p = 0.5;       // probability of each cross-class edge
    bool planted = false;
};

struct GeneratedMcc {
    MccInstance instance;
    std::optional<CliqueWitness> plant;
};

// Class i takes the next class_sizes[i] ids. Throws std::invalid_argument
// for k < 2, a class size below 1, or p outside [0, 1].
GeneratedMcc gen_mcc(const MccGenSpec& spec);

struct DfvsGenSpec {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    double p = 0.3;
    bool planted_hamiltonian = false;
};

struct GeneratedDfvs {
    DfvsInstance instance;
    std::optional<CycleWitness> plant;
};

// X is the last k ids; the others form a DAG whose topological order is id
// order. Throws std::invalid_argument unless n >= k >= 2 and p in [0, 1].
GeneratedDfvs gen_digraph_with_dfvs(const DfvsGenSpec& spec);

struct PlanGenSpec {
    std::uint64_t seed = 0;
    int min = 0;
    int max = 0;
};

// One count per edge of the wall of the given order, in sorted edge order.
std::vector<int> gen_subdivision_plan(const PlanGenSpec& spec, int wall_order);

// G(n, p) digraph without loops; each ordered pair independently.
Digraph gen_random_digraph(std::uint64_t seed, int n, double p);

}  // namespace dirham
