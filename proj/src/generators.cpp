#include "dirham/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dirham/wall.hpp"

namespace dirham {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace

GeneratedMcc gen_mcc(const MccGenSpec& spec) {
    const int k = static_cast<int>(spec.class_sizes.size());
    if (k < 2) throw std::invalid_argument("need at least two classes");
    check_probability(spec.p);
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> class_of;
    int n = 0;
    for (int i = 0; i < k; ++i) {
        if (spec.class_sizes[i] < 1) throw std::invalid_argument("class sizes must be >= 1");
        classes.emplace_back();
        for (int a = 0; a < spec.class_sizes[i]; ++a) {
            classes.back().push_back(n++);
            class_of.push_back(i);
        }
    }
    Rng rng(spec.seed);
    std::optional<CliqueWitness> plant;
    if (spec.planted) {
        plant.emplace();
        for (const auto& cls : classes)
            plant->vertices.push_back(cls[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cls.size()) - 1))]);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (class_of[u] == class_of[v]) continue;
            const bool planted_edge =
                plant && plant->vertices[class_of[u]] == u && plant->vertices[class_of[v]] == v;
            if (rng.bernoulli(spec.p) || planted_edge) edges.emplace_back(u, v);
        }
    GeneratedMcc out{MccInstance(Digraph(n, edges), classes), plant};
    if (plant && !is_multicolored_clique(out.instance, *plant)) throw std::logic_error("plant is not a clique");
    return out;
}

GeneratedDfvs gen_digraph_with_dfvs(const DfvsGenSpec& spec) {
    const int n = spec.n, k = spec.k;
    if (k < 2 || n < k) throw std::invalid_argument("need n >= k >= 2");
    check_probability(spec.p);
    Rng rng(spec.seed);
    const int free_count = n - k;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::optional<CycleWitness> plant;

    if (spec.planted_hamiltonian) {
        // Random cyclic arrangement of k X-slots and n-k DAG slots, rotated to
        // start at an X-slot; DAG vertices are numbered in order of appearance
        // so every DAG-to-DAG cycle edge goes forward.
        std::vector<char> is_x(static_cast<std::size_t>(n), 0);
        std::fill(is_x.begin(), is_x.begin() + k, 1);
        rng.shuffle(is_x);
        const auto first_x = std::find(is_x.begin(), is_x.end(), 1) - is_x.begin();
        std::rotate(is_x.begin(), is_x.begin() + first_x, is_x.end());
        std::vector<Vertex> x_ids;
        for (int a = 0; a < k; ++a) x_ids.push_back(free_count + a);
        rng.shuffle(x_ids);
        plant.emplace();
        int next_free = 0, next_x = 0;
        for (char slot : is_x) plant->vertices.push_back(slot ? x_ids[next_x++] : next_free++);
        for (int a = 0; a < n; ++a) edges.emplace_back(plant->vertices[a], plant->vertices[(a + 1) % n]);
    }
    for (Vertex u = 0; u < free_count; ++u)
        for (Vertex v = u + 1; v < free_count; ++v)
            if (rng.bernoulli(spec.p)) edges.emplace_back(u, v);
    for (Vertex x = free_count; x < n; ++x)
        for (Vertex v = 0; v < n; ++v) {
            if (v == x) continue;
            if (rng.bernoulli(spec.p)) edges.emplace_back(x, v);
            if (v < free_count && rng.bernoulli(spec.p)) edges.emplace_back(v, x);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Vertex> dfvs;
    for (Vertex x = free_count; x < n; ++x) dfvs.push_back(x);
    GeneratedDfvs out{DfvsInstance(Digraph(n, edges), dfvs), plant};
    if (plant && !validate_witness(out.instance.graph(), *plant, true)) throw std::logic_error("plant is not Hamiltonian");
    return out;
}

std::vector<int> gen_subdivision_plan(const PlanGenSpec& spec, int wall_order) {
    if (spec.min < 0 || spec.max < spec.min) throw std::invalid_argument("need 0 <= min <= max");
    const auto edges = build_wall(wall_order).graph.edge_count();
    Rng rng(spec.seed);
    std::vector<int> plan;
    for (std::size_t e = 0; e < edges; ++e) plan.push_back(static_cast<int>(rng.uniform(spec.min, spec.max)));
    return plan;
}

Digraph gen_random_digraph(std::uint64_t seed, int n, double p) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    check_probability(p);
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(p)) edges.emplace_back(u, v);
    return Digraph(n, edges);
}

}  // namespace dirham
