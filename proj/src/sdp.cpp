#include "ugx/sdp.hpp"

#include <algorithm>
#include <cmath>

#include "ugx/errors.hpp"
#include "ugx/json_util.hpp"
#include "ugx/parallel.hpp"
#include "ugx/random.hpp"

namespace ugx {

double FeasibilityReport::max_violation() const {
    return std::max({orthogonality, norm_sum, triangle, dist_upper, norm_lower});
}

void validate(const UGInstance& inst, const SdpSolution& s) {
    validate(inst);
    if (s.n != inst.graph.n || s.k != inst.k)
        throw input_error("sdp: solution shape (n, k) does not match instance");
    if (s.dim < 1) throw input_error("sdp: dim must be >= 1");
    if (s.vectors.rows() != static_cast<Index>(s.n) * s.k || s.vectors.cols() != s.dim)
        throw input_error("sdp: vector matrix shape mismatch");
}

SdpSolution integral_solution(const UGInstance& inst, const Assignment& a) {
    validate(inst, a);
    SdpSolution s;
    s.n = inst.graph.n;
    s.k = inst.k;
    s.dim = 1;
    s.vectors = RowMatrixXd::Zero(static_cast<Index>(s.n) * s.k, 1);
    for (int v = 0; v < s.n; ++v) s.vectors(s.row(v, a.labels[v]), 0) = 1.0;
    return s;
}

SdpSolution mix_solutions(const std::vector<std::pair<SdpSolution, double>>& parts,
                          double weight_tol) {
    if (parts.empty()) throw input_error("mix_solutions: need at least one part");
    double total = 0.0;
    for (const auto& [part, w] : parts) {
        if (w <= 0.0) throw input_error("mix_solutions: weights must be positive");
        if (part.n != parts.front().first.n || part.k != parts.front().first.k)
            throw input_error("mix_solutions: parts must share (n, k)");
        total += w;
    }
    if (std::abs(total - 1.0) > weight_tol)
        throw input_error("mix_solutions: weights must sum to 1");

    SdpSolution out;
    out.n = parts.front().first.n;
    out.k = parts.front().first.k;
    out.dim = 0;
    for (const auto& [part, w] : parts) out.dim += part.dim;
    out.vectors = RowMatrixXd::Zero(static_cast<Index>(out.n) * out.k, out.dim);
    Index col = 0;
    for (const auto& [part, w] : parts) {
        out.vectors.middleCols(col, part.dim) = std::sqrt(w) * part.vectors;
        col += part.dim;
    }
    return out;
}

namespace {

// Triangle slack from Gram entries:
//   ||a-c||^2 - ||a-b||^2 - ||b-c||^2 = 2(G_ab + G_bc - G_ac - G_bb).
inline double triangle_violation(const MatrixX<double>& g, Index a, Index b, Index c) {
    return 2.0 * (g(a, b) + g(b, c) - g(a, c) - g(b, b));
}

}  // namespace

FeasibilityReport verify_feasibility(const SdpSolution& s, double tol,
                                     std::int64_t triple_budget, const Graph* graph) {
    if (s.n < 1 || s.k < 1 || s.dim < 1 ||
        s.vectors.rows() != static_cast<Index>(s.n) * s.k || s.vectors.cols() != s.dim)
        throw input_error("verify_feasibility: malformed solution");
    const Index m = s.vectors.rows();
    const MatrixX<double> g = s.vectors * s.vectors.transpose();

    FeasibilityReport rep;
    rep.tol = tol;

    // (2) per-vertex total squared norm.
    for (int v = 0; v < s.n; ++v) {
        double sum = 0.0;
        for (int i = 0; i < s.k; ++i) sum += g(s.row(v, i), s.row(v, i));
        rep.norm_sum = std::max(rep.norm_sum, std::abs(sum - 1.0));
    }

    // (1), (4), (5) over all pairs, parallel over the first index.
    {
        const int workers = thread_count();
        std::vector<double> ortho(workers + 1, 0.0), upper(workers + 1, 0.0),
            lower(workers + 1, 0.0);
        parallel_chunks(m, [&](std::int64_t lo, std::int64_t hi, int w) {
            double o = 0.0, up = 0.0, lo_v = 0.0;
            for (Index a = lo; a < hi; ++a) {
                for (Index b = a + 1; b < m; ++b) {
                    const double gab = g(a, b);
                    if (a / s.k == b / s.k) o = std::max(o, std::abs(gab));
                    up = std::max(up, -2.0 * gab);
                    lo_v = std::max(lo_v, 2.0 * gab - 2.0 * g(b, b));
                    lo_v = std::max(lo_v, 2.0 * gab - 2.0 * g(a, a));
                }
            }
            ortho[w] = o;
            upper[w] = up;
            lower[w] = lo_v;
        });
        for (int w = 0; w <= workers; ++w) {
            rep.orthogonality = std::max(rep.orthogonality, ortho[w]);
            rep.dist_upper = std::max(rep.dist_upper, upper[w]);
            rep.norm_lower = std::max(rep.norm_lower, lower[w]);
        }
    }

    // (3) squared-distance triangle inequality.
    if (m <= 60) {
        rep.triples_exhaustive = true;
        for (Index a = 0; a < m; ++a)
            for (Index c = a + 1; c < m; ++c)
                for (Index b = 0; b < m; ++b) {
                    if (b == a || b == c) continue;
                    rep.triangle = std::max(rep.triangle, triangle_violation(g, a, b, c));
                    ++rep.triples_checked;
                }
    } else {
        Rng rng(0x7E57F3A5u);
        for (std::int64_t t = 0; t < triple_budget; ++t) {
            const Index a = static_cast<Index>(rng.bounded(m));
            Index b = static_cast<Index>(rng.bounded(m));
            Index c = static_cast<Index>(rng.bounded(m));
            if (a == b || b == c || a == c) continue;
            rep.triangle = std::max(rep.triangle, triangle_violation(g, a, b, c));
            ++rep.triples_checked;
        }
        if (graph != nullptr) {
            // All triples among the 2k vectors at the endpoints of each edge.
            std::vector<Index> ids(2 * s.k);
            for (const auto& [u, v] : graph->edges) {
                for (int i = 0; i < s.k; ++i) {
                    ids[i] = s.row(u, i);
                    ids[s.k + i] = s.row(v, i);
                }
                for (std::size_t x = 0; x < ids.size(); ++x)
                    for (std::size_t z = x + 1; z < ids.size(); ++z)
                        for (std::size_t y = 0; y < ids.size(); ++y) {
                            if (y == x || y == z) continue;
                            rep.triangle = std::max(
                                rep.triangle, triangle_violation(g, ids[x], ids[y], ids[z]));
                            ++rep.triples_checked;
                        }
            }
        }
    }
    rep.triangle = std::max(rep.triangle, 0.0);
    rep.dist_upper = std::max(rep.dist_upper, 0.0);
    rep.norm_lower = std::max(rep.norm_lower, 0.0);
    return rep;
}

SdpObjectiveReport sdp_objective(const UGInstance& inst, const SdpSolution& s) {
    validate(inst, s);
    SdpObjectiveReport rep;
    rep.edge_costs.resize(inst.graph.edges.size());
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
        const auto [u, v] = inst.graph.edges[e];
        const auto& perm = inst.perms[e];
        double cost = 0.0;
        for (int i = 0; i < s.k; ++i)
            cost += (s.vectors.row(s.row(u, i)) - s.vectors.row(s.row(v, perm[i])))
                        .squaredNorm();
        rep.edge_costs[e] = 0.5 * cost;
    }
    double sum = 0.0;
    for (double c : rep.edge_costs) sum += c;
    rep.epsilon = rep.edge_costs.empty() ? 0.0 : sum / static_cast<double>(rep.edge_costs.size());
    return rep;
}

void append_vectors_json(std::string& out, const RowMatrixXd& rows, int n, int k,
                         const std::string& indent) {
    out += "[\n";
    for (int v = 0; v < n; ++v) {
        out += indent + "  [";
        for (int i = 0; i < k; ++i) {
            out += "[";
            const Index r = static_cast<Index>(v) * k + i;
            for (Index c = 0; c < rows.cols(); ++c) {
                out += fmt_g17(rows(r, c));
                if (c + 1 < rows.cols()) out += ", ";
            }
            out += (i + 1 < k) ? "], " : "]";
        }
        out += (v + 1 < n) ? "],\n" : "]\n";
    }
    out += indent + "]";
}

std::string serialize_sdp(const SdpSolution& s) {
    std::string out = "{\n";
    out += "  \"dim\": " + std::to_string(s.dim) + ",\n";
    out += "  \"k\": " + std::to_string(s.k) + ",\n";
    out += "  \"n\": " + std::to_string(s.n) + ",\n";
    out += "  \"vectors\": ";
    append_vectors_json(out, s.vectors, s.n, s.k, "  ");
    out += "\n}\n";
    return out;
}

SdpSolution parse_sdp(const std::string& text) {
    const json j = parse_json_text(text, "sdp solution");
    SdpSolution s;
    s.dim = require_int(j, "dim", "sdp solution");
    s.k = require_int(j, "k", "sdp solution");
    s.n = require_int(j, "n", "sdp solution");
    if (s.n < 1 || s.k < 1 || s.dim < 1)
        throw input_error("sdp solution: n, k, dim must be >= 1");
    const json& vecs = require_field(j, "vectors", "sdp solution");
    if (!vecs.is_array() || static_cast<int>(vecs.size()) != s.n)
        throw input_error("sdp solution: \"vectors\" must list one entry per vertex");
    s.vectors.resize(static_cast<Index>(s.n) * s.k, s.dim);
    for (int v = 0; v < s.n; ++v) {
        const json& per_vertex = vecs[v];
        if (!per_vertex.is_array() || static_cast<int>(per_vertex.size()) != s.k)
            throw input_error("sdp solution: vertex entry must list one vector per label");
        for (int i = 0; i < s.k; ++i) {
            const json& vec = per_vertex[i];
            if (!vec.is_array() || static_cast<int>(vec.size()) != s.dim)
                throw input_error("sdp solution: vector length must equal dim");
            for (int c = 0; c < s.dim; ++c) {
                if (!vec[c].is_number())
                    throw input_error("sdp solution: coordinates must be numbers");
                s.vectors(s.row(v, i), c) = vec[c].get<double>();
            }
        }
    }
    return s;
}

}  // namespace ugx
