// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the runtime CPU check in kernels.cpp.

#include "nusol/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>
#include <cmath>
#include <cstdint>

namespace nusol::kernels::avx2 {

namespace {

// exp via 2^k * expm-style rational approximation (Cephes coefficients)
inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);        // ln2 hi
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);  // ln2 lo
    const __m256d max_x = _mm256_set1_pd(708.0);
    const __m256d min_x = _mm256_set1_pd(-708.0);

    __m256d xc = _mm256_min_pd(_mm256_max_pd(x, min_x), max_x);
    __m256d k = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, c1, xc);
    r = _mm256_fnmadd_pd(k, c2, r);

    const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
    const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
    const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
    const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
    const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
    const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
    const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);

    __m256d r2 = _mm256_mul_pd(r, r);
    __m256d P = _mm256_fmadd_pd(p0, r2, p1);
    P = _mm256_fmadd_pd(P, r2, p2);
    P = _mm256_mul_pd(P, r);
    __m256d Q = _mm256_fmadd_pd(q0, r2, q1);
    Q = _mm256_fmadd_pd(Q, r2, q2);
    Q = _mm256_fmadd_pd(Q, r2, q3);
    // e^r = 1 + 2 P / (Q - P)
    __m256d e = _mm256_add_pd(_mm256_set1_pd(1.0),
                              _mm256_div_pd(_mm256_add_pd(P, P), _mm256_sub_pd(Q, P)));

    // scale by 2^k through the exponent field
    __m128i ki = _mm256_cvtpd_epi32(k);
    __m256i ki64 = _mm256_cvtepi32_epi64(ki);
    __m256i pow2 = _mm256_slli_epi64(_mm256_add_epi64(ki64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(e, _mm256_castsi256_pd(pow2));
}

// natural log via mantissa/exponent split (Cephes coefficients)
inline __m256d log_pd(__m256d x) {
    const __m256i exp_mask = _mm256_set1_epi64x(0x7ff0000000000000ll);
    const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffll);
    const __m256i half_bits = _mm256_set1_epi64x(0x3fe0000000000000ll);

    __m256i xi = _mm256_castpd_si256(x);
    __m256i ei = _mm256_srli_epi64(_mm256_and_si256(xi, exp_mask), 52);
    // m in [0.5, 1)
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(xi, mant_mask), half_bits));

    // biased exponent (small non-negative int64) to double via the 2^52 trick
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(ei, _mm256_set1_epi64x(0x4330000000000000ll))),
        _mm256_set1_pd(4503599627370496.0));

    const __m256d sqrth = _mm256_set1_pd(0.70710678118654752440);
    __m256d below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    // if m < sqrt(1/2): m *= 2, e -= 1
    m = _mm256_add_pd(m, _mm256_and_pd(below, m));
    e = _mm256_sub_pd(e, _mm256_and_pd(below, _mm256_set1_pd(1.0)));

    __m256d z = _mm256_sub_pd(m, _mm256_set1_pd(1.0));

    const __m256d P0 = _mm256_set1_pd(1.01875663804580931796e-4);
    const __m256d P1 = _mm256_set1_pd(4.97494994976747001425e-1);
    const __m256d P2 = _mm256_set1_pd(4.70579119878881725854e0);
    const __m256d P3 = _mm256_set1_pd(1.44989225341610930846e1);
    const __m256d P4 = _mm256_set1_pd(1.79368678507819816313e1);
    const __m256d P5 = _mm256_set1_pd(7.70838733755885391666e0);
    const __m256d Q0 = _mm256_set1_pd(1.12873587189167450590e1);
    const __m256d Q1 = _mm256_set1_pd(4.52279145837532221105e1);
    const __m256d Q2 = _mm256_set1_pd(8.29875266912776603211e1);
    const __m256d Q3 = _mm256_set1_pd(7.11544750618563894466e1);
    const __m256d Q4 = _mm256_set1_pd(2.31251620126765340583e1);

    __m256d P = _mm256_fmadd_pd(P0, z, P1);
    P = _mm256_fmadd_pd(P, z, P2);
    P = _mm256_fmadd_pd(P, z, P3);
    P = _mm256_fmadd_pd(P, z, P4);
    P = _mm256_fmadd_pd(P, z, P5);
    __m256d Q = _mm256_add_pd(z, Q0);
    Q = _mm256_fmadd_pd(Q, z, Q1);
    Q = _mm256_fmadd_pd(Q, z, Q2);
    Q = _mm256_fmadd_pd(Q, z, Q3);
    Q = _mm256_fmadd_pd(Q, z, Q4);

    __m256d z2 = _mm256_mul_pd(z, z);
    __m256d z3 = _mm256_mul_pd(z2, z);
    __m256d y = _mm256_mul_pd(z3, _mm256_div_pd(P, Q));
    y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z2, y);  // y - z^2/2

    const __m256d ln2_hi = _mm256_set1_pd(6.93359375e-1);
    const __m256d ln2_lo = _mm256_set1_pd(-2.121944400546905827679e-4);
    __m256d eb = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));
    __m256d res = _mm256_fmadd_pd(eb, ln2_lo, _mm256_add_pd(y, z));
    return _mm256_fmadd_pd(eb, ln2_hi, res);
}

} // namespace

void exp_grid(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, exp_pd(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) {
        alignas(32) double buf[4] = {x[i], 0.0, 0.0, 0.0};
        alignas(32) double res[4];
        _mm256_store_pd(res, exp_pd(_mm256_load_pd(buf)));
        out[i] = res[0];
    }
}

void log_grid(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, log_pd(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) {
        alignas(32) double buf[4] = {x[i], 1.0, 1.0, 1.0};
        alignas(32) double res[4];
        _mm256_store_pd(res, log_pd(_mm256_load_pd(buf)));
        out[i] = res[0];
    }
}

void affine_update(const double* base, const double* x, double c, double shift, double* out,
                   std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(shift);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_fmadd_pd(vc, _mm256_loadu_pd(x + i), _mm256_loadu_pd(base + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(v, vs));
    }
    for (; i < n; ++i) out[i] = std::fma(c, x[i], base[i]) + shift;
}

double weighted_norm_sq(const double* w, const double* f, const double* g, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vf = _mm256_loadu_pd(f + i);
        __m256d vg = _mm256_loadu_pd(g + i);
        __m256d s = _mm256_fmadd_pd(vg, vg, _mm256_mul_pd(vf, vf));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), s, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) total += w[i] * (f[i] * f[i] + g[i] * g[i]);
    return total;
}

void jacobi_grid(int n, double alpha, double beta, const double* x, double* out,
                 std::size_t n_pts) {
    if (n == 0) {
        for (std::size_t i = 0; i < n_pts; ++i) out[i] = 1.0;
        return;
    }
    const double ab2 = 0.5 * (alpha + beta + 2.0);
    std::size_t i = 0;
    for (; i + 4 <= n_pts; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d p0 = _mm256_set1_pd(1.0);
        __m256d p1 = _mm256_fmadd_pd(_mm256_set1_pd(ab2),
                                     _mm256_sub_pd(vx, _mm256_set1_pd(1.0)),
                                     _mm256_set1_pd(alpha + 1.0));
        for (int k = 2; k <= n; ++k) {
            const double c1 = 2.0 * k * (k + alpha + beta) * (2.0 * k + alpha + beta - 2.0);
            const double c2a = (2.0 * k + alpha + beta - 1.0);
            const double c2b = (2.0 * k + alpha + beta) * (2.0 * k + alpha + beta - 2.0);
            const double c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + alpha + beta);
            __m256d lin = _mm256_fmadd_pd(_mm256_set1_pd(c2b), vx,
                                          _mm256_set1_pd(alpha * alpha - beta * beta));
            __m256d p2 = _mm256_fnmadd_pd(_mm256_set1_pd(c3), p0,
                                          _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(c2a), lin), p1));
            p2 = _mm256_div_pd(p2, _mm256_set1_pd(c1));
            p0 = p1;
            p1 = p2;
        }
        _mm256_storeu_pd(out + i, p1);
    }
    for (; i < n_pts; ++i) {
        double p0 = 1.0;
        double p1 = (alpha + 1.0) + ab2 * (x[i] - 1.0);
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

} // namespace nusol::kernels::avx2

#endif // x86_64
