#pragma once

#include <optional>
#include <vector>

#include "nusol/hulthen.hpp"

// Closed-form solution of the bound-state energy condition: the quadratic
// terms in q = sqrt(beta_sq)/delta cancel, leaving q linear in E; combined
// with beta_sq(E) = delta^2 q(E)^2 this is a quadratic in E solved exactly.

namespace nusol {

struct BoundState {
    StateLabel label;
    SymmetryLimit limit;
    PhysicalParameters params;
    double energy_E;   ///< fm^-1
    double q;          ///< sqrt(beta_sq)/delta, > 0
    double eta;        ///< eta~ (PSpin) or eta (Spin), >= 0
    double N_tilde;    ///< n + 1/2 + eta
    double residual;   ///< energy-condition check value, |residual| <= 1e-10
};

struct DoubletReport {
    BoundState partner_a;
    BoundState partner_b;
    double splitting;  ///< E_a - E_b, fm^-1
};

struct SplittingSweep {
    std::vector<DoubletReport> reports;
    std::vector<double> skipped_u0;  ///< U0 values where a partner had no bound state
};

/// sqrt of the (perfect-square) spin-orbit radicand:
/// |kappa + u - 1/2| for PSpin, |kappa + u + 1/2| for Spin, with u = U0/delta.
double eta(SymmetryLimit limit, int kappa, double u);

/// Solves the energy condition for one state. Returns std::nullopt when no
/// quadratic root passes the physical filters (q > 0, beta_sq > 0, away from
/// the E = M + C_ps / E = -M + C_s threshold by 1e-12). Throws
/// AmbiguousBranch if both roots pass.
std::optional<BoundState> solve_energy(const PhysicalParameters& params, SymmetryLimit limit,
                                       const StateLabel& label);

/// All bound states with kappa in [kappa_min, kappa_max] \ {0} and
/// n <= n_max, sorted by (kappa, n).
std::vector<BoundState> enumerate_states(const PhysicalParameters& params, SymmetryLimit limit,
                                         int kappa_min, int kappa_max, int n_max);

/// Degeneracy partner: kappa -> 1 - kappa (PSpin), kappa -> -1 - kappa (Spin),
/// same equation-level n. An involution.
StateLabel doublet_partner(const StateLabel& label, SymmetryLimit limit);

/// Solves both doublet partners over a list of tensor strengths U0 and
/// reports E_a - E_b; U0 values where either partner is missing are skipped
/// and recorded.
SplittingSweep splitting_sweep(const PhysicalParameters& params, SymmetryLimit limit,
                               const StateLabel& label, const std::vector<double>& u0_values);

} // namespace nusol
