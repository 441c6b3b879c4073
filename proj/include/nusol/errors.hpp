#pragma once

#include <stdexcept>
#include <string>

namespace nusol {

/// Base class for all solver-level failures. Usage errors (bad arguments,
/// r <= 0, kappa == 0) throw std::domain_error / std::invalid_argument instead.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// c8 or c9 of the parametric reduction is negative: the inputs admit no
/// normalizable bound-state parameterization.
struct NegativeRadicand : SolverError {
    enum class Which { c8, c9 };
    Which which;
    double value;
    NegativeRadicand(Which w, double v)
        : SolverError(std::string("negative radicand ") +
                      (w == Which::c8 ? "c8 = " : "c9 = ") + std::to_string(v)),
          which(w), value(v) {}
};

/// Both quadratic roots passed the physical filters. Must not happen in the
/// supported parameter regime; surfaced instead of silently picking one.
struct AmbiguousBranch : SolverError {
    double root_a, root_b;
    AmbiguousBranch(double a, double b)
        : SolverError("both energy roots pass the physical filters: E = " +
                      std::to_string(a) + " and E = " + std::to_string(b)),
          root_a(a), root_b(b) {}
};

/// The first-order coupling denominator |M -+ E +- C| is below tolerance.
struct ThresholdEnergy : SolverError {
    explicit ThresholdEnergy(double denom)
        : SolverError("energy at coupling threshold, denominator = " + std::to_string(denom)) {}
};

/// Radial grid does not contain the wavefunction tail to the required level.
struct UnconvergedTail : SolverError {
    explicit UnconvergedTail(const std::string& msg) : SolverError(msg) {}
};

/// Outer iteration of the finite-difference eigensolver failed to converge,
/// or the requested problem cannot be solved by it.
struct NoConvergence : SolverError {
    explicit NoConvergence(const std::string& msg) : SolverError(msg) {}
};

/// No discrete root with the requested node structure inside the search window.
struct NodeCountUnavailable : SolverError {
    explicit NodeCountUnavailable(const std::string& msg) : SolverError(msg) {}
};

} // namespace nusol
