#include "nusol/nu_param.hpp"

#include <cmath>
#include <stdexcept>

#include "nusol/errors.hpp"

namespace nusol {

namespace {

// Clamp radicands that are analytically >= 0 but land a few ulp below zero
// (perfect-square cancellation); genuinely negative values stay negative.
double clamp_radicand(double value, double scale) {
    if (value < 0.0 && value >= -1e-12 * scale) return 0.0;
    return value;
}

} // namespace

NuConstants derive_constants(const NuProblem& p) {
    NuConstants c{};
    c.c4 = 0.5 * (1.0 - p.c1);
    c.c5 = 0.5 * (p.c2 - 2.0 * p.c3);
    c.c6 = c.c5 * c.c5 + p.p2;
    c.c7 = 2.0 * c.c4 * c.c5 - p.p1;
    c.c8 = c.c4 * c.c4 + p.p0;
    c.c9 = p.c3 * (c.c7 + p.c3 * c.c8) + c.c6;

    c.c8 = clamp_radicand(c.c8, std::max({std::fabs(c.c4 * c.c4), std::fabs(p.p0), 1.0}));
    c.c9 = clamp_radicand(
        c.c9, std::max({std::fabs(c.c6), std::fabs(p.c3 * c.c7), std::fabs(p.c3 * p.c3 * c.c8), 1.0}));

    if (c.c8 < 0.0) throw NegativeRadicand(NegativeRadicand::Which::c8, c.c8);
    if (c.c9 < 0.0) throw NegativeRadicand(NegativeRadicand::Which::c9, c.c9);

    c.sqrt_c8 = std::sqrt(c.c8);
    c.sqrt_c9 = std::sqrt(c.c9);

    c.c10 = p.c1 + 2.0 * c.c4 + 2.0 * c.sqrt_c8 - 1.0;
    c.c12 = c.c4 + c.sqrt_c8;
    c.laguerre_limit = (p.c3 == 0.0);
    if (!c.laguerre_limit) {
        c.c11 = 1.0 - p.c1 - 2.0 * c.c4 + 2.0 / p.c3 * c.sqrt_c9;
        c.c13 = -c.c4 + (c.sqrt_c9 - c.c5) / p.c3;
    } else {
        // c3 -> 0: P_n^{(c10,c11)}(1 - 2 c3 s) -> L_n^{c10}(2 sqrt(c9) s) and
        // (1 - c3 s)^{c13} -> e^{(c5 - sqrt(c9)) s}
        c.c11 = 2.0 * c.sqrt_c9;
        c.c13 = c.c5 - c.sqrt_c9;
    }
    return c;
}

double energy_residual(const NuProblem& p, const NuConstants& c, int n) {
    if (n < 0) throw std::invalid_argument("energy_residual: n must be non-negative");
    const double dn = static_cast<double>(n);
    return p.c2 * dn - (2.0 * dn + 1.0) * c.c5 +
           (2.0 * dn + 1.0) * (c.sqrt_c9 - p.c3 * c.sqrt_c8) + dn * (dn - 1.0) * p.c3 + c.c7 +
           2.0 * p.c3 * c.c8 - 2.0 * c.sqrt_c8 * c.sqrt_c9;
}

WavefunctionSpec wavefunction_spec(const NuConstants& c) {
    return {c.c10, c.c11, c.c12, c.c13};
}

double laguerre_eval(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_eval: n must be non-negative");
    if (n == 0) return 1.0;
    double l0 = 1.0;
    double l1 = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2.0 * k + 1.0 + a - x) * l1 - (k + a) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

double laguerre_limit(const NuProblem& p, int n, double s) {
    if (p.c3 != 0.0)
        throw std::invalid_argument("laguerre_limit requires c3 = 0");
    const NuConstants c = derive_constants(p);
    return std::pow(s, c.c12) * std::exp(c.c13 * s) * laguerre_eval(n, c.c10, c.c11 * s);
}

} // namespace nusol
