#include "ugx/instance.hpp"

#include <algorithm>
#include <cmath>

#include "ugx/errors.hpp"
#include "ugx/json_util.hpp"
#include "ugx/random.hpp"

namespace ugx {

namespace {

void check_permutation(const std::vector<int>& p, int k) {
    if (static_cast<int>(p.size()) != k)
        throw input_error("instance: permutation length != k");
    std::vector<char> seen(k, 0);
    for (int x : p) {
        if (x < 0 || x >= k) throw input_error("instance: permutation entry out of range");
        if (seen[x]) throw input_error("instance: permutation is not a bijection");
        seen[x] = 1;
    }
}

}  // namespace

std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

void validate(const UGInstance& inst) {
    validate(inst.graph);
    if (inst.k < 1) throw input_error("instance: k must be >= 1");
    if (inst.perms.size() != inst.graph.edges.size())
        throw input_error("instance: one permutation per edge required");
    for (const auto& p : inst.perms) check_permutation(p, inst.k);
}

void validate(const UGInstance& inst, const Assignment& a) {
    validate(inst);
    if (static_cast<int>(a.labels.size()) != inst.graph.n)
        throw input_error("assignment: length != n");
    for (int x : a.labels)
        if (x < 0 || x >= inst.k) throw input_error("assignment: label out of range");
}

std::pair<UGInstance, Assignment> gen_planted(const Graph& g, int k, double noise,
                                              std::uint64_t seed) {
    validate(g);
    if (k < 1) throw input_error("gen_planted: k must be >= 1");
    if (noise < 0.0 || noise > 1.0) throw input_error("gen_planted: noise must be in [0, 1]");

    const std::int64_t m = g.num_edges();
    // Tiny nudge so decimal noise values whose true product is integral do
    // not round down (e.g. 0.3 * 10 in binary floating point).
    const std::int64_t corrupt =
        static_cast<std::int64_t>(std::floor(noise * static_cast<double>(m) + 1e-9));
    if (corrupt > 0 && k == 1)
        throw input_error("gen_planted: cannot corrupt edges with k = 1 (identity always holds)");

    Rng rng(seed);
    Assignment plant;
    plant.labels.resize(g.n);
    for (int v = 0; v < g.n; ++v) plant.labels[v] = static_cast<int>(rng.bounded(k));

    UGInstance inst;
    inst.graph = g;
    inst.k = k;
    inst.perms.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        // Uniform permutation conditioned on p[x_u] = x_v: draw uniform, then
        // swap the slot holding x_v into position x_u (a k-to-1 map onto the
        // conditioned set, so uniformity is preserved).
        std::vector<int> p = rng.permutation(k);
        const int xu = plant.labels[u], xv = plant.labels[v];
        auto it = std::find(p.begin(), p.end(), xv);
        std::swap(p[xu], *it);
        inst.perms[e] = std::move(p);
    }

    if (corrupt > 0) {
        // Sample `corrupt` distinct edge indices by partial Fisher-Yates.
        std::vector<std::int64_t> idx(m);
        for (std::int64_t i = 0; i < m; ++i) idx[i] = i;
        for (std::int64_t i = 0; i < corrupt; ++i) {
            const std::int64_t j = i + static_cast<std::int64_t>(rng.bounded(m - i));
            std::swap(idx[i], idx[j]);
        }
        std::vector<std::int64_t> chosen(idx.begin(), idx.begin() + corrupt);
        std::sort(chosen.begin(), chosen.end());
        for (std::int64_t e : chosen) {
            const auto [u, v] = g.edges[static_cast<std::size_t>(e)];
            const int xu = plant.labels[u], xv = plant.labels[v];
            // Uniform permutation conditioned on p[x_u] != x_v, by rejection.
            for (int tries = 0;; ++tries) {
                std::vector<int> p = rng.permutation(k);
                if (p[xu] != xv) {
                    inst.perms[static_cast<std::size_t>(e)] = std::move(p);
                    break;
                }
                if (tries > 1000)
                    throw numeric_error("gen_planted: rejection sampling stalled");
            }
        }
    }
    return {std::move(inst), std::move(plant)};
}

double evaluate(const UGInstance& inst, const Assignment& a) {
    validate(inst, a);
    std::int64_t satisfied = 0;
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
        const auto [u, v] = inst.graph.edges[e];
        if (inst.perms[e][a.labels[u]] == a.labels[v]) ++satisfied;
    }
    return static_cast<double>(satisfied) / static_cast<double>(inst.graph.num_edges());
}

UGInstance parse_instance(const std::string& text) {
    const json j = parse_json_text(text, "instance");
    UGInstance inst;
    inst.graph.n = require_int(j, "n", "instance");
    inst.graph.d = require_int(j, "d", "instance");
    inst.k = require_int(j, "k", "instance");
    const json& edges = require_field(j, "edges", "instance");
    if (!edges.is_array()) throw input_error("instance: \"edges\" must be an array");
    for (const json& e : edges) {
        const int u = require_int(e, "u", "instance edge");
        const int v = require_int(e, "v", "instance edge");
        const json& perm = require_field(e, "perm", "instance edge");
        if (!perm.is_array()) throw input_error("instance: \"perm\" must be an array");
        std::vector<int> p;
        p.reserve(perm.size());
        for (const json& x : perm) {
            if (!x.is_number_integer())
                throw input_error("instance: permutation entries must be integers");
            p.push_back(x.get<int>());
        }
        inst.graph.edges.emplace_back(u, v);
        inst.perms.push_back(std::move(p));
    }
    validate(inst);
    return inst;
}

std::string serialize_instance(const UGInstance& inst) {
    validate(inst);
    json edges = json::array();
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
        edges.push_back(json{{"u", inst.graph.edges[e].first},
                             {"v", inst.graph.edges[e].second},
                             {"perm", inst.perms[e]}});
    }
    const json j{{"n", inst.graph.n}, {"d", inst.graph.d}, {"k", inst.k},
                 {"edges", std::move(edges)}};
    return j.dump(2) + "\n";
}

Assignment parse_assignment(const std::string& text) {
    const json j = parse_json_text(text, "assignment");
    const json& labels = require_field(j, "labels", "assignment");
    if (!labels.is_array()) throw input_error("assignment: \"labels\" must be an array");
    Assignment a;
    a.labels.reserve(labels.size());
    for (const json& x : labels) {
        if (!x.is_number_integer()) throw input_error("assignment: labels must be integers");
        a.labels.push_back(x.get<int>());
    }
    return a;
}

std::string serialize_assignment(const Assignment& a) {
    return json{{"labels", a.labels}}.dump(2) + "\n";
}

}  // namespace ugx
