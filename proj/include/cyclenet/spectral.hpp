#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cyclenet/graph.hpp"
#include "cyclenet/matrix.hpp"

namespace cyclenet {

/// All eigenvalues of a symmetric matrix, sorted ascending, via cyclic
/// Jacobi rotations; sweeps continue until the off-diagonal Frobenius norm
/// drops below tol.
inline std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m, double tol = 1e-9) {
    std::size_t n = m.size();
    if (n == 0) return {};
    if (m.max_asymmetry() > tol)
        throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric within tol");

    std::vector<double> a = m.data();
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    const int max_sweeps = 128;
    for (int sweep = 0; sweep < max_sweeps && off_norm() >= tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    if (off_norm() >= tol)
        throw std::runtime_error("symmetric_eigenvalues: Jacobi iteration did not converge");

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Laplacian spectrum summary: the spectral gap is the smallest nonzero
/// eigenvalue (second-smallest for connected graphs) and the eigen-ratio is
/// gap over the largest eigenvalue.
struct SpectralSummary {
    std::vector<double> eigenvalues;  // ascending
    double spectral_gap = 0.0;
    double eigen_ratio = 0.0;
    int components = 0;  // multiplicity of the zero eigenvalue
};

inline SpectralSummary sync_metrics(const Graph& g, double tol = 1e-9) {
    if (g.node_count() == 0) throw std::invalid_argument("sync_metrics: empty graph");
    SpectralSummary s;
    s.components = component_count(g);
    s.eigenvalues = symmetric_eigenvalues(laplacian(g), tol);
    if (s.components >= g.node_count())
        throw std::invalid_argument("sync_metrics: graph has no edges, spectral gap undefined");
    s.spectral_gap = s.eigenvalues[static_cast<std::size_t>(s.components)];
    s.eigen_ratio = s.spectral_gap / s.eigenvalues.back();
    return s;
}

}  // namespace cyclenet
