#pragma once

#include <limits>

#include "ugx/graph.hpp"

namespace ugx {

// Spectral/combinatorial expansion summary for a regular graph. When n is
// small enough for exact enumeration, h is the true edge expansion and the
// Cheeger sandwich h^2/8 <= lambda2 <= h is audited. Otherwise h is unknown
// and [h_lower, h_upper] = [lambda2, sqrt(8*lambda2)] is the certified
// interval implied by Cheeger.
struct SpectralReport {
    double lambda2 = 0.0;
    bool h_is_exact = false;
    double h = std::numeric_limits<double>::quiet_NaN();
    double h_lower = 0.0;
    double h_upper = 0.0;
    double cheeger_lower = std::numeric_limits<double>::quiet_NaN();  // h^2/8
    double cheeger_upper = std::numeric_limits<double>::quiet_NaN();  // h
    bool cheeger_ok = true;
};

// Second-smallest eigenvalue of the normalized Laplacian L = I - A/d, by
// Lanczos iteration with the all-ones eigenvector deflated and full
// reorthogonalization. Falls back to a dense eigendecomposition for n <= 512
// if the iteration stalls; otherwise throws eigensolver_error carrying the
// best Ritz value and its residual.
double laplacian_lambda2(const Graph& g, double tol = 1e-10);

// Dense-eigendecomposition reference for the same quantity.
double laplacian_lambda2_dense(const Graph& g);

// Exact edge expansion
//   h = min over nonempty proper X of (|cut(X)| / |E|) / (min(|X|,|V\X|)/|V|)
// by enumerating subsets containing vertex 0 (complement symmetry halves the
// space). Subset minimum is taken over exact integer fractions. Throws
// size_error when g.n > max_n.
double edge_expansion_exact(const Graph& g, int max_n = 24);

SpectralReport spectral_report(const Graph& g);

}  // namespace ugx
