#include "ugx/graph.hpp"

#include <algorithm>
#include <set>

#include "ugx/errors.hpp"
#include "ugx/random.hpp"

namespace ugx {

void validate(const Graph& g) {
    if (g.n < 1) throw input_error("graph: n must be >= 1");
    if (g.d < 1 || g.d >= g.n) throw input_error("graph: need 1 <= d < n");
    if ((static_cast<std::int64_t>(g.n) * g.d) % 2 != 0)
        throw input_error("graph: n*d must be even");
    const std::int64_t want = static_cast<std::int64_t>(g.n) * g.d / 2;
    if (g.num_edges() != want)
        throw input_error("graph: expected " + std::to_string(want) + " edges, got " +
                          std::to_string(g.num_edges()));
    std::vector<int> degree(g.n, 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw input_error("graph: edge endpoint out of range");
        if (u >= v) throw input_error("graph: edges must satisfy u < v");
        if (e > 0 && !(g.edges[e - 1] < g.edges[e]))
            throw input_error("graph: edges must be sorted and distinct");
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < g.n; ++v) {
        if (degree[v] != g.d)
            throw input_error("graph: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(degree[v]) + ", expected " + std::to_string(g.d));
    }
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1) throw input_error("gen_random_regular: n must be >= 1");
    if (d < 1 || d >= n) throw input_error("gen_random_regular: need 1 <= d < n");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw input_error("gen_random_regular: n*d must be even");

    Rng rng(seed);
    const std::int64_t max_restarts = static_cast<std::int64_t>(10) * n * d;
    // Half-edge pairing: repeatedly draw two unpaired half-edges; accept the
    // pair unless it would form a loop or a parallel edge. If some half-edges
    // remain but every legal pair is exhausted, restart from scratch.
    for (std::int64_t attempt = 0; attempt <= max_restarts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        rng.shuffle(stubs);

        std::set<std::pair<int, int>> chosen;
        bool stuck = false;
        while (!stubs.empty()) {
            // Check whether any legal pair remains among the surviving stubs.
            // Cheap test first: pick random pairs; on repeated failure, scan.
            bool found = false;
            std::size_t a = 0, b = 0;
            for (int tries = 0; tries < 64 && !found; ++tries) {
                a = rng.bounded(stubs.size());
                b = rng.bounded(stubs.size());
                if (a == b) continue;
                int u = stubs[a], v = stubs[b];
                if (u == v) continue;
                auto key = std::minmax(u, v);
                if (chosen.count({key.first, key.second})) continue;
                found = true;
            }
            if (!found) {
                // Exhaustive scan to distinguish "unlucky" from "stuck".
                for (std::size_t i = 0; i < stubs.size() && !found; ++i) {
                    for (std::size_t j = i + 1; j < stubs.size() && !found; ++j) {
                        int u = stubs[i], v = stubs[j];
                        if (u == v) continue;
                        auto key = std::minmax(u, v);
                        if (chosen.count({key.first, key.second})) continue;
                        a = i;
                        b = j;
                        found = true;
                    }
                }
            }
            if (!found) {
                stuck = true;
                break;
            }
            int u = stubs[a], v = stubs[b];
            auto key = std::minmax(u, v);
            chosen.insert({key.first, key.second});
            // Remove the two stubs (larger index first).
            if (a < b) std::swap(a, b);
            stubs[a] = stubs.back();
            stubs.pop_back();
            stubs[b] = stubs.back();
            stubs.pop_back();
        }
        if (!stuck) {
            Graph g;
            g.n = n;
            g.d = d;
            g.edges.assign(chosen.begin(), chosen.end());
            validate(g);
            return g;
        }
    }
    throw numeric_error("gen_random_regular: restart budget exhausted for n=" +
                        std::to_string(n) + ", d=" + std::to_string(d));
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"d", g.d}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    Graph g;
    g.n = require_int(j, "n", "graph");
    g.d = require_int(j, "d", "graph");
    const json& edges = require_field(j, "edges", "graph");
    if (!edges.is_array()) throw input_error("graph: \"edges\" must be an array");
    g.edges.reserve(edges.size());
    for (const json& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error("graph: each edge must be a pair of integers");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    validate(g);
    return g;
}

}  // namespace ugx
