#pragma once

#include <string>

#include "nusol/nu_param.hpp"

// Hulthen scalar-vector-tensor potential family in natural units
// (hbar = c = 1, energies and inverse lengths in fm^-1), the shifted
// centrifugal approximation 1/r^2 ~ delta^2 e^{-2 delta r}/(1-e^{-delta r})^2,
// and the mapping onto the parametric template for both symmetry limits.

namespace nusol {

enum class SymmetryLimit { Spin, PSpin };

/// Potential strengths and symmetry constant. V(r) = V0 h(r), S(r) = -S0 h(r),
/// U(r) = -U0 h(r) with h(r) = e^{-delta r}/(1 - e^{-delta r}).
struct PhysicalParameters {
    double mass_M = 5.0;          ///< fm^-1
    double screening_delta = 0.1; ///< fm^-1, > 0
    double vector_V0 = 2.5;       ///< fm^-1
    double scalar_S0 = 2.9;       ///< fm^-1
    double tensor_U0 = 0.0;       ///< fm^-1 (enters through U0 and U0/delta)
    double symmetry_C = 0.0;      ///< C_ps or C_s per limit, fm^-1

    double delta0() const { return vector_V0 + scalar_S0; }   ///< V0 + S0
    double sigma0() const { return vector_V0 - scalar_S0; }   ///< V0 - S0
    double tensor_u() const { return tensor_U0 / screening_delta; }

    void validate() const;  ///< throws std::invalid_argument on delta <= 0 or M <= 0
};

/// Radial and spin-orbit quantum numbers. n_radial is the equation-level
/// radial quantum number; the pseudospin display convention for kappa > 0
/// (tables label those rows with n_radial - 1) lives in display_n().
struct StateLabel {
    int n_radial = 0;
    int kappa = -1;  ///< nonzero

    int l() const { return kappa > 0 ? kappa : -kappa - 1; }
    int l_tilde() const { return kappa > 0 ? kappa - 1 : -kappa; }
    int two_j() const { return 2 * (kappa > 0 ? kappa : -kappa) - 1; }

    /// Display radial quantum number: pseudospin kappa > 0 rows print n-1.
    int display_n(SymmetryLimit limit) const;
    /// e.g. "1s1/2", "0d3/2" (uses display_n)
    std::string spectroscopic(SymmetryLimit limit) const;

    void validate() const;  ///< kappa != 0, n_radial >= 0
};

/// h(r) = e^{-delta r} / (1 - e^{-delta r}); throws std::domain_error for r <= 0.
double hulthen_term(double delta, double r);

/// Ratio of the shifted approximation to the exact centrifugal term,
/// [delta^2 e^{-2 delta r}/(1-e^{-delta r})^2] * r^2 = (x/(e^x - 1))^2, x = delta r.
/// Strictly below 1, approaching 1 as delta r -> 0.
double pekeris_ratio(double delta, double r);

/// Coefficients of the approximated radial equation
/// psi'' - (A g(r) - B h(r)) psi = beta_sq psi with g = h^2:
///   PSpin: A = kappa(kappa-1) d^2 + U0(U0 + 2 kappa d - d), B = -gamma~ Delta0 + U0 d,
///          beta_sq = (M+E)(M-E+C),  gamma~ = E - M - C
///   Spin:  A = kappa(kappa+1) d^2 + U0(U0 + 2 kappa d + d), B = -(gamma Sigma0 + U0 d),
///          beta_sq = (M-E)(M+E-C),  gamma = M + E - C
struct OdeCoefficients {
    double A;        ///< fm^-2
    double B;        ///< fm^-2
    double beta_sq;  ///< fm^-2
};
OdeCoefficients ode_coefficients(const PhysicalParameters& params, SymmetryLimit limit, int kappa,
                                 double E);

/// Maps the approximated equation onto the parametric template:
/// c1 = c2 = c3 = 1, p0 = beta_sq/d^2, p1 = (B + 2 beta_sq)/d^2,
/// p2 = (A + B + beta_sq)/d^2 (s = e^{-delta r}).
NuProblem to_nu_problem(const PhysicalParameters& params, SymmetryLimit limit, int kappa,
                        double E);

/// Name of the orbital-angular-momentum letter (s, p, d, f, g, h, i, k, ...).
char spectroscopic_letter(int l);

} // namespace nusol
