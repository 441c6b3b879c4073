#pragma once

#include <cstddef>

// Grid kernels used by the wavefunction and eigensolver hot loops.
//
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant. The active table is chosen once at runtime
// from CPU capabilities; tests reach both variants directly through
// scalar_ops() / avx2_ops() and check their equivalence.

namespace nusol::kernels {

enum class Backend { scalar, avx2 };

struct Ops {
    /// out[i] = exp(x[i])
    void (*exp_grid)(const double* x, double* out, std::size_t n);
    /// out[i] = log(x[i]); x[i] > 0
    void (*log_grid)(const double* x, double* out, std::size_t n);
    /// out[i] = base[i] + c * x[i] + shift
    void (*affine_update)(const double* base, const double* x, double c, double shift,
                          double* out, std::size_t n);
    /// sum_i w[i] * (f[i]^2 + g[i]^2)
    double (*weighted_norm_sq)(const double* w, const double* f, const double* g, std::size_t n);
    /// out[i] = P_n^(alpha,beta)(x[i]) by the three-term recurrence
    void (*jacobi_grid)(int n, double alpha, double beta, const double* x, double* out,
                        std::size_t n_pts);
};

/// Table picked at startup: AVX2 when compiled in and the CPU supports it.
const Ops& active();
Backend active_backend();

const Ops& scalar_ops();
/// nullptr when the AVX2 variants are not compiled in or the CPU lacks them.
const Ops* avx2_ops();

} // namespace nusol::kernels
