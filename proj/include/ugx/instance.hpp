#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ugx/graph.hpp"

namespace ugx {

// Unique Games instance: one permutation constraint pi_uv per stored edge
// (u,v), u < v, demanding pi_uv(x_u) = x_v. The reverse direction uses the
// inverse permutation and is never stored.
struct UGInstance {
    Graph graph;
    int k = 0;
    // perms[e][i] = pi_uv(i) for graph.edges[e] = (u, v).
    std::vector<std::vector<int>> perms;
};

struct Assignment {
    std::vector<int> labels;
};

void validate(const UGInstance& inst);
void validate(const UGInstance& inst, const Assignment& a);

// Plants a uniform assignment, draws satisfying permutations, then corrupts
// exactly floor(noise * |E|) distinct edges so the plant violates them.
// evaluate(inst, plant) = 1 - floor(noise*|E|)/|E| exactly by construction.
std::pair<UGInstance, Assignment> gen_planted(const Graph& g, int k, double noise,
                                              std::uint64_t seed);

// Fraction of stored edges with pi_uv(a[u]) = a[v].
double evaluate(const UGInstance& inst, const Assignment& a);

UGInstance parse_instance(const std::string& text);
std::string serialize_instance(const UGInstance& inst);

Assignment parse_assignment(const std::string& text);
std::string serialize_assignment(const Assignment& a);

// Inverse permutation helper (pi_vu = pi_uv^-1).
std::vector<int> inverse_perm(const std::vector<int>& p);

}  // namespace ugx
