#include "dirham/dtd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dirham {

namespace {

// Empty string when parent/root describe an arborescence on all nodes.
std::string tree_problem(const DirectedTreeDecomposition& d) {
    const int t = d.node_count();
    if (t == 0) return "decomposition has no nodes";
    if (d.root < 0 || d.root >= t) return "root is not a node";
    if (d.parent[d.root] != -1) return "root has a parent";
    if (static_cast<int>(d.beta.size()) != t || static_cast<int>(d.gamma.size()) != t)
        return "beta/gamma sizes do not match the node count";
    for (int c = 0; c < t; ++c) {
        if (c == d.root) continue;
        if (d.parent[c] < 0 || d.parent[c] >= t) return "node " + std::to_string(c) + " has no valid parent";
        // Walking up must reach the root within t steps.
        int cur = c, steps = 0;
        while (cur != d.root && steps <= t) {
            cur = d.parent[cur];
            ++steps;
        }
        if (cur != d.root) return "node " + std::to_string(c) + " does not reach the root";
    }
    return {};
}

std::vector<std::vector<int>> children_of(const DirectedTreeDecomposition& d) {
    std::vector<std::vector<int>> ch(static_cast<std::size_t>(d.node_count()));
    for (int c = 0; c < d.node_count(); ++c)
        if (c != d.root) ch[d.parent[c]].push_back(c);
    return ch;
}

}  // namespace

DtdReport verify_dtd(const Digraph& g, const DirectedTreeDecomposition& d) {
    DtdReport r;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.violations.push_back(std::move(msg));
    };
    if (auto problem = tree_problem(d); !problem.empty()) {
        fail(problem);
        return r;
    }
    const int n = g.vertex_count();
    const int t = d.node_count();

    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int node = 0; node < t; ++node)
        for (Vertex v : d.beta[node]) {
            if (!g.contains(v)) {
                fail("bag of node " + std::to_string(node) + " has invalid vertex " + std::to_string(v));
            } else if (owner[v] >= 0) {
                fail("vertex " + std::to_string(v) + " lies in two bags");
            } else {
                owner[v] = node;
            }
        }
    for (Vertex v = 0; v < n; ++v)
        if (owner[v] < 0) fail("vertex " + std::to_string(v) + " lies in no bag");
    for (int node = 0; node < t; ++node)
        for (Vertex v : d.gamma[node])
            if (!g.contains(v)) fail("guard of node " + std::to_string(node) + " has invalid vertex " + std::to_string(v));
    if (!r.valid) return r;

    const auto ch = children_of(d);
    for (int c = 0; c < t; ++c) {
        if (c == d.root) continue;
        std::vector<char> in_a(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{c};
        while (!stack.empty()) {
            const int node = stack.back();
            stack.pop_back();
            for (Vertex v : d.beta[node]) in_a[v] = 1;
            for (int x : ch[node]) stack.push_back(x);
        }
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        for (Vertex v : d.gamma[c]) removed[v] = 1;
        for (const auto& comp : strongly_connected_components(g, removed)) {
            if (comp.size() < 2) continue;  // no loops, so a singleton carries no closed walk
            bool a = false, b = false;
            for (Vertex v : comp) (in_a[v] ? a : b) = true;
            if (a && b) {
                fail("edge " + std::to_string(d.parent[c]) + "->" + std::to_string(c) +
                     ": a closed walk avoiding the guard meets both sides (component of " +
                     std::to_string(comp.front()) + ")");
                break;
            }
        }
    }
    return r;
}

int dtd_width(const DirectedTreeDecomposition& d) {
    if (auto problem = tree_problem(d); !problem.empty()) throw std::invalid_argument(problem);
    std::vector<std::set<Vertex>> big(static_cast<std::size_t>(d.node_count()));
    for (int node = 0; node < d.node_count(); ++node) {
        big[node].insert(d.beta[node].begin(), d.beta[node].end());
        if (node != d.root) {
            big[node].insert(d.gamma[node].begin(), d.gamma[node].end());
            big[d.parent[node]].insert(d.gamma[node].begin(), d.gamma[node].end());
        }
    }
    int width = -1;
    for (const auto& s : big) width = std::max(width, static_cast<int>(s.size()) - 1);
    return width;
}

int dtd_width(const Digraph& g, const DirectedTreeDecomposition& d) {
    const auto report = verify_dtd(g, d);
    if (!report.valid) throw std::invalid_argument("invalid decomposition: " + report.violations.front());
    return dtd_width(d);
}

DirectedTreeDecomposition dag_decomposition(const Digraph& g) {
    const auto order = topological_order(g);
    if (!order) throw std::invalid_argument("graph has a cycle");
    DirectedTreeDecomposition d;
    const int n = g.vertex_count();
    if (n == 0) {
        d.parent = {-1};
        d.beta = {{}};
        d.gamma = {{}};
        return d;
    }
    for (int node = 0; node < n; ++node) {
        d.parent.push_back(node - 1);
        d.beta.push_back({(*order)[node]});
        d.gamma.emplace_back();
    }
    return d;
}

json to_json(const DirectedTreeDecomposition& d) {
    json nodes = json::array(), parent = json::object(), beta = json::object(), gamma = json::object();
    for (int node = 0; node < d.node_count(); ++node) {
        nodes.push_back(node);
        beta[std::to_string(node)] = d.beta[node];
        if (node != d.root) {
            parent[std::to_string(node)] = d.parent[node];
            gamma[std::to_string(d.parent[node]) + "->" + std::to_string(node)] = d.gamma[node];
        }
    }
    return {{"nodes", nodes}, {"parent", parent}, {"root", d.root}, {"beta", beta}, {"gamma", gamma}};
}

DirectedTreeDecomposition dtd_from_json(const json& j) {
    if (!j.contains("nodes") || !j.contains("root"))
        throw std::invalid_argument("decomposition JSON needs \"nodes\" and \"root\"");
    std::map<int, int> index;
    for (const auto& id : j.at("nodes")) {
        const int key = id.get<int>();
        if (!index.emplace(key, static_cast<int>(index.size())).second)
            throw std::invalid_argument("node listed twice: " + std::to_string(key));
    }
    auto node = [&](const std::string& key) {
        std::size_t used = 0;
        const int id = std::stoi(key, &used);
        auto it = index.find(id);
        if (used != key.size() || it == index.end()) throw std::invalid_argument("unknown node: " + key);
        return it->second;
    };
    DirectedTreeDecomposition d;
    const int t = static_cast<int>(index.size());
    d.parent.assign(static_cast<std::size_t>(t), -1);
    d.beta.assign(static_cast<std::size_t>(t), {});
    d.gamma.assign(static_cast<std::size_t>(t), {});
    d.root = node(std::to_string(j.at("root").get<int>()));
    if (j.contains("parent"))
        for (const auto& [c, p] : j.at("parent").items()) d.parent[node(c)] = node(std::to_string(p.get<int>()));
    if (j.contains("beta"))
        for (const auto& [c, vs] : j.at("beta").items()) d.beta[node(c)] = vs.get<std::vector<Vertex>>();
    if (j.contains("gamma"))
        for (const auto& [key, vs] : j.at("gamma").items()) {
            const auto arrow = key.find("->");
            if (arrow == std::string::npos) throw std::invalid_argument("gamma key must be \"p->c\": " + key);
            const int p = node(key.substr(0, arrow)), c = node(key.substr(arrow + 2));
            if (d.parent[c] != p) throw std::invalid_argument("gamma key is not a tree edge: " + key);
            d.gamma[c] = vs.get<std::vector<Vertex>>();
        }
    return d;
}

}  // namespace dirham
