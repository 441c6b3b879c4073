#include "nusol/kernels.hpp"

#include <cmath>

namespace nusol::kernels::scalar {

void exp_grid(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

void log_grid(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::log(x[i]);
}

void affine_update(const double* base, const double* x, double c, double shift, double* out,
                   std::size_t n) {
    // std::fma keeps this bit-identical to the vectorized variant
    for (std::size_t i = 0; i < n; ++i) out[i] = std::fma(c, x[i], base[i]) + shift;
}

double weighted_norm_sq(const double* w, const double* f, const double* g, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * (f[i] * f[i] + g[i] * g[i]);
    return acc;
}

void jacobi_grid(int n, double alpha, double beta, const double* x, double* out,
                 std::size_t n_pts) {
    if (n == 0) {
        for (std::size_t i = 0; i < n_pts; ++i) out[i] = 1.0;
        return;
    }
    for (std::size_t i = 0; i < n_pts; ++i) {
        double p0 = 1.0;
        double p1 = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x[i] - 1.0);
        for (int k = 2; k <= n; ++k) {
            const double c1 = 2.0 * k * (k + alpha + beta) * (2.0 * k + alpha + beta - 2.0);
            const double c2a = (2.0 * k + alpha + beta - 1.0);
            const double c2b = (2.0 * k + alpha + beta) * (2.0 * k + alpha + beta - 2.0);
            const double c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + alpha + beta);
            const double p2 = (c2a * (c2b * x[i] + alpha * alpha - beta * beta) * p1 - c3 * p0) / c1;
            p0 = p1;
            p1 = p2;
        }
        out[i] = p1;
    }
}

const Ops table = {exp_grid, log_grid, affine_update, weighted_norm_sq, jacobi_grid};

} // namespace nusol::kernels::scalar
