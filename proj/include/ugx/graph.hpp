#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ugx/json_util.hpp"

namespace ugx {

// Simple d-regular undirected graph. Edges are stored once as (u, v) with
// u < v, sorted lexicographically.
struct Graph {
    int n = 0;
    int d = 0;
    std::vector<std::pair<int, int>> edges;

    std::int64_t num_edges() const { return static_cast<std::int64_t>(edges.size()); }
};

// Throws input_error unless the edge list is a valid simple d-regular graph
// in canonical order.
void validate(const Graph& g);

// Adjacency lists, each sorted ascending.
std::vector<std::vector<int>> adjacency_lists(const Graph& g);

// Uniform-ish random simple d-regular graph by pairing half-edges, rejecting
// pairs that would create a loop or parallel edge and restarting when stuck.
// Throws input_error for invalid (n, d) and numeric_error if the restart
// budget (10 * n * d) is exhausted.
Graph gen_random_regular(int n, int d, std::uint64_t seed);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

}  // namespace ugx
