#pragma once

// Potential-agnostic parametric Nikiforov-Uvarov reduction for equations of
// the hypergeometric class,
//
//   psi'' + (c1 - c2 s)/(s (1 - c3 s)) psi'
//         + (-p2 s^2 + p1 s - p0)/(s^2 (1 - c3 s)^2) psi = 0,
//
// giving an algebraic energy condition and Jacobi (c3 != 0) or Laguerre
// (c3 = 0) shaped solutions.

namespace nusol {

/// Template coefficients of the reduced second-order equation.
struct NuProblem {
    double c1, c2, c3;
    double p0, p1, p2;
};

/// Derived constants c4..c13 with their square roots.
///
/// The square roots take the sign branch that satisfies the side conditions
/// c10 > -1, c11 > -1, c12 > 0, c13 > 0 required for a normalizable solution:
/// c10 = c1 + 2 c4 + 2 sqrt(c8) - 1 and c12 = c4 + sqrt(c8) with principal
/// (non-negative) roots throughout.
struct NuConstants {
    double c4, c5, c6, c7, c8, c9, c10, c11, c12, c13;
    double sqrt_c8, sqrt_c9;
    bool laguerre_limit;  ///< true when c3 == 0 and c11, c13 use the limit parameterization
};

/// Shape parameters of psi(s) = N s^{c12} (1 - c3 s)^{c13} P_n^{(c10,c11)}(1 - 2 c3 s).
struct WavefunctionSpec {
    double jacobi_alpha;           ///< c10
    double jacobi_beta;            ///< c11
    double s_exponent;             ///< c12
    double one_minus_s_exponent;   ///< c13
};

/// Computes c4..c13. Throws NegativeRadicand when c8 < 0 or c9 < 0 (beyond
/// roundoff of an analytically zero radicand, which is clamped to zero).
/// At c3 = 0 exactly, c11 and c13 switch to the Laguerre-limit forms
/// c11 = 2 sqrt(c9), c13 = c5 - sqrt(c9).
NuConstants derive_constants(const NuProblem& problem);

/// Left-hand side of the energy condition
///   c2 n - (2n+1) c5 + (2n+1)(sqrt(c9) - c3 sqrt(c8)) + n(n-1) c3
///   + c7 + 2 c3 c8 - 2 sqrt(c8 c9);
/// zero iff (problem, n) is on-shell.
double energy_residual(const NuProblem& problem, const NuConstants& constants, int n);

/// The (c10, c11, c12, c13) tuple that fixes the radial shape up to normalization.
WavefunctionSpec wavefunction_spec(const NuConstants& constants);

/// Evaluates s^{c12} e^{c13 s} L_n^{c10}(c11 s) for a c3 = 0 problem
/// (unnormalized). Throws std::invalid_argument when problem.c3 != 0.
double laguerre_limit(const NuProblem& problem, int n, double s);

/// Generalized Laguerre polynomial L_n^a(x) by the three-term recurrence.
double laguerre_eval(int n, double a, double x);

} // namespace nusol
