#include "nusol/hulthen.hpp"

#include <cmath>
#include <stdexcept>

namespace nusol {

void PhysicalParameters::validate() const {
    if (!(screening_delta > 0.0))
        throw std::invalid_argument("screening_delta must be > 0");
    if (!(mass_M > 0.0))
        throw std::invalid_argument("mass_M must be > 0");
    if (!std::isfinite(vector_V0) || !std::isfinite(scalar_S0) || !std::isfinite(tensor_U0) ||
        !std::isfinite(symmetry_C))
        throw std::invalid_argument("potential parameters must be finite");
}

void StateLabel::validate() const {
    if (kappa == 0) throw std::invalid_argument("kappa must be nonzero");
    if (n_radial < 0) throw std::invalid_argument("n_radial must be non-negative");
}

int StateLabel::display_n(SymmetryLimit limit) const {
    if (limit == SymmetryLimit::PSpin && kappa > 0) return n_radial - 1;
    return n_radial;
}

char spectroscopic_letter(int l) {
    static const char letters[] = "spdfghiklmnoqrtuvwxyz";
    if (l < 0 || l >= static_cast<int>(sizeof(letters)) - 1) return '?';
    return letters[l];
}

std::string StateLabel::spectroscopic(SymmetryLimit limit) const {
    return std::to_string(display_n(limit)) + spectroscopic_letter(l()) +
           std::to_string(two_j()) + "/2";
}

double hulthen_term(double delta, double r) {
    if (!(r > 0.0)) throw std::domain_error("hulthen_term: r must be > 0");
    if (!(delta > 0.0)) throw std::domain_error("hulthen_term: delta must be > 0");
    const double em = -std::expm1(-delta * r);  // 1 - e^{-delta r}, accurate for small delta r
    return std::exp(-delta * r) / em;
}

double pekeris_ratio(double delta, double r) {
    if (!(r > 0.0)) throw std::domain_error("pekeris_ratio: r must be > 0");
    const double x = delta * r;
    const double t = x / std::expm1(x);  // x e^{-x} / (1 - e^{-x})
    return t * t;
}

OdeCoefficients ode_coefficients(const PhysicalParameters& p, SymmetryLimit limit, int kappa,
                                 double E) {
    p.validate();
    const double d = p.screening_delta;
    const double U0 = p.tensor_U0;
    const double M = p.mass_M;
    const double C = p.symmetry_C;
    const double k = static_cast<double>(kappa);
    OdeCoefficients out{};
    if (limit == SymmetryLimit::PSpin) {
        out.A = k * (k - 1.0) * d * d + U0 * (U0 + 2.0 * k * d - d);
        const double gamma_t = E - M - C;
        out.B = -gamma_t * p.delta0() + U0 * d;
        out.beta_sq = (M + E) * (M - E + C);
    } else {
        out.A = k * (k + 1.0) * d * d + U0 * (U0 + 2.0 * k * d + d);
        const double gamma = M + E - C;
        // The sign of the gamma Sigma0 coupling follows the second-order
        // equation eliminated from the coupled system; with Sigma0 < 0 this
        // makes the Hulthen tail attractive for weakly bound E near -M.
        out.B = -(gamma * p.sigma0() + U0 * d);
        out.beta_sq = (M - E) * (M + E - C);
    }
    return out;
}

NuProblem to_nu_problem(const PhysicalParameters& p, SymmetryLimit limit, int kappa, double E) {
    const OdeCoefficients c = ode_coefficients(p, limit, kappa, E);
    const double d2 = p.screening_delta * p.screening_delta;
    NuProblem np{};
    np.c1 = np.c2 = np.c3 = 1.0;
    np.p0 = c.beta_sq / d2;
    np.p1 = (c.B + 2.0 * c.beta_sq) / d2;
    np.p2 = (c.A + c.B + c.beta_sq) / d2;
    return np;
}

} // namespace nusol
