#include "nusol/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "nusol/errors.hpp"

namespace nusol {

double eta(SymmetryLimit limit, int kappa, double u) {
    const double k = static_cast<double>(kappa);
    return limit == SymmetryLimit::PSpin ? std::fabs(k + u - 0.5) : std::fabs(k + u + 0.5);
}

namespace {

double beta_sq_of(const PhysicalParameters& p, SymmetryLimit limit, double E) {
    if (limit == SymmetryLimit::PSpin)
        return (p.mass_M + E) * (p.mass_M - E + p.symmetry_C);
    return (p.mass_M - E) * (p.mass_M + E - p.symmetry_C);
}

// b^2 - 4ac with the fma error compensation (Kahan); the raw difference
// cancels to ~1e-10 relative here and would spoil the residual check.
double discriminant(double a, double b, double c) {
    const double p = b * b;
    const double dp = std::fma(b, b, -p);
    const double t = a * c;
    const double dt = std::fma(a, c, -t);
    return (p - 4.0 * t) + (dp - 4.0 * dt);
}

struct LinearQ {
    double q0, q1;  // q(E) = q0 + q1 E
    double operator()(double E) const { return q0 + q1 * E; }
};

} // namespace

std::optional<BoundState> solve_energy(const PhysicalParameters& params, SymmetryLimit limit,
                                       const StateLabel& label) {
    params.validate();
    label.validate();

    const double M = params.mass_M;
    const double C = params.symmetry_C;
    const double d2 = params.screening_delta * params.screening_delta;
    const double u = params.tensor_u();
    const double k = static_cast<double>(label.kappa);
    const double et = eta(limit, label.kappa, u);
    const double Nt = label.n_radial + 0.5 + et;

    double K, coupling;  // coupling = Delta0 (PSpin) or Sigma0 (Spin)
    if (limit == SymmetryLimit::PSpin) {
        K = (k - 0.5) * (k - 0.5) + u * (u + 2.0 * k) - 0.25;
        coupling = params.delta0();
    } else {
        K = (k + 0.5) * (k + 0.5) + u * (u + 2.0 * k) - 0.25;
        coupling = params.sigma0();
    }

    LinearQ q{};
    q.q1 = coupling / d2 / (2.0 * Nt);
    if (limit == SymmetryLimit::PSpin)
        q.q0 = (Nt * Nt - K - (M + C) * coupling / d2) / (2.0 * Nt);
    else
        q.q0 = (Nt * Nt - K + (M - C) * coupling / d2) / (2.0 * Nt);

    // beta_sq(E) = d2 q(E)^2 as a quadratic in E
    const double a = 1.0 + d2 * q.q1 * q.q1;
    const double b = 2.0 * d2 * q.q0 * q.q1 - C;
    const double c = d2 * q.q0 * q.q0 - M * M + (limit == SymmetryLimit::PSpin ? -M * C : M * C);

    const double disc = discriminant(a, b, c);
    if (disc < 0.0) return std::nullopt;

    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sq, b));
    double roots[2];
    int n_roots;
    if (qq != 0.0) {
        roots[0] = qq / a;
        roots[1] = c / qq;
        n_roots = (roots[0] == roots[1]) ? 1 : 2;
    } else {
        roots[0] = 0.0;
        n_roots = 1;
    }

    // Newton polish on g(E) = d2 q(E)^2 - beta_sq(E); the quadratic
    // coefficients carry cancellation-level noise, g itself does not.
    for (int i = 0; i < n_roots; ++i) {
        for (int it = 0; it < 2; ++it) {
            const double qe = q(roots[i]);
            const double g = d2 * qe * qe - beta_sq_of(params, limit, roots[i]);
            const double gp = 2.0 * d2 * q.q1 * qe - (C - 2.0 * roots[i]);
            if (gp == 0.0) break;
            roots[i] -= g / gp;
        }
    }

    const double threshold = (limit == SymmetryLimit::PSpin) ? M + C : -M + C;
    int accepted = -1;
    for (int i = 0; i < n_roots; ++i) {
        const double E = roots[i];
        if (!(q(E) > 0.0)) continue;
        if (!(beta_sq_of(params, limit, E) > 0.0)) continue;
        if (std::fabs(E - threshold) <= 1e-12) continue;
        if (accepted >= 0) throw AmbiguousBranch(roots[accepted], E);
        accepted = i;
    }
    if (accepted < 0) return std::nullopt;

    BoundState st{};
    st.label = label;
    st.limit = limit;
    st.params = params;
    st.energy_E = roots[accepted];
    st.q = q(st.energy_E);
    st.eta = et;
    st.N_tilde = Nt;

    const NuProblem np = to_nu_problem(params, limit, label.kappa, st.energy_E);
    st.residual = energy_residual(np, derive_constants(np), label.n_radial);
    if (!(std::fabs(st.residual) <= 1e-10))
        throw SolverError("internal: solved state fails the energy-condition check, residual = " +
                          std::to_string(st.residual));
    if (C == 0.0 && !(std::fabs(st.energy_E) < M))
        throw SolverError("internal: |E| >= M for C = 0");
    return st;
}

std::vector<BoundState> enumerate_states(const PhysicalParameters& params, SymmetryLimit limit,
                                         int kappa_min, int kappa_max, int n_max) {
    if (n_max < 0) throw std::invalid_argument("enumerate_states: n_max must be >= 0");
    std::vector<BoundState> out;
    for (int kappa = kappa_min; kappa <= kappa_max; ++kappa) {
        if (kappa == 0) continue;
        for (int n = 0; n <= n_max; ++n) {
            if (auto st = solve_energy(params, limit, {n, kappa})) out.push_back(*st);
        }
    }
    return out;
}

StateLabel doublet_partner(const StateLabel& label, SymmetryLimit limit) {
    label.validate();
    StateLabel partner = label;
    partner.kappa = (limit == SymmetryLimit::PSpin) ? 1 - label.kappa : -1 - label.kappa;
    return partner;
}

SplittingSweep splitting_sweep(const PhysicalParameters& params, SymmetryLimit limit,
                               const StateLabel& label, const std::vector<double>& u0_values) {
    SplittingSweep sweep;
    const StateLabel partner = doublet_partner(label, limit);
    for (double u0 : u0_values) {
        PhysicalParameters p = params;
        p.tensor_U0 = u0;
        auto a = solve_energy(p, limit, label);
        auto b = solve_energy(p, limit, partner);
        if (!a || !b) {
            sweep.skipped_u0.push_back(u0);
            continue;
        }
        sweep.reports.push_back({*a, *b, a->energy_E - b->energy_E});
    }
    return sweep;
}

} // namespace nusol
