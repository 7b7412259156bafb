#include "gp/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "gp/errors.hpp"

namespace gp {

namespace {

double offdiag_norm(const std::vector<double>& a, std::size_t dim) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) s += a[i * dim + j] * a[i * dim + j];
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim) {
    constexpr double kTol = 1e-10;
    constexpr int kMaxSweeps = 100;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(a, dim) < kTol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double apq = a[p * dim + q];
                if (apq == 0.0) continue;
                const double tau = (a[q * dim + q] - a[p * dim + p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < dim; ++i) {  // columns p, q
                    const double aip = a[i * dim + p];
                    const double aiq = a[i * dim + q];
                    a[i * dim + p] = c * aip - s * aiq;
                    a[i * dim + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < dim; ++i) {  // rows p, q
                    const double api = a[p * dim + i];
                    const double aqi = a[q * dim + i];
                    a[p * dim + i] = c * api - s * aqi;
                    a[q * dim + i] = s * api + c * aqi;
                }
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
            }
        }
    }
    if (!converged && offdiag_norm(a, dim) >= kTol)
        throw NoConvergence("jacobi: sweep limit reached");

    std::vector<double> eig(dim);
    for (std::size_t i = 0; i < dim; ++i) eig[i] = a[i * dim + i];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

Spectrum oracle_spectrum(const Graph& g) {
    const auto dim = static_cast<std::size_t>(g.vertex_count);
    std::vector<double> a(dim * dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v)
        for (auto w : g.adjacency[v]) a[v * dim + static_cast<std::size_t>(w)] = 1.0;

    Spectrum s;
    s.values = jacobi_eigenvalues(std::move(a), dim);
    s.n = g.params.n;
    s.k = g.params.k;
    s.source = SpectrumSource::Oracle;
    return s;
}

}  // namespace gp
