#include "ringkepler/parabolic.hpp"

#include <cmath>
#include <numbers>

#include "ringkepler/error.hpp"
#include "ringkepler/specfun.hpp"

namespace ringkepler {

ParabolicPoint to_parabolic(double x, double y, double z) {
    const double rho2 = x * x + y * y;
    if (rho2 == 0.0) throw DomainError("to_parabolic: point lies on the z axis");
    const double r = std::sqrt(rho2 + z * z);
    ParabolicPoint p;
    // Avoid cancellation in r + z (z < 0) and r - z (z > 0); xi * eta = rho^2.
    if (z >= 0.0) {
        p.xi = r + z;
        p.eta = rho2 / p.xi;
    } else {
        p.eta = r - z;
        p.xi = rho2 / p.eta;
    }
    p.phi = std::atan2(y, x);
    if (p.phi < 0.0) p.phi += 2.0 * std::numbers::pi;
    return p;
}

std::array<double, 3> from_parabolic(const ParabolicPoint& p) {
    if (!(p.xi >= 0.0) || !(p.eta >= 0.0)) throw DomainError("from_parabolic: xi, eta must be nonnegative");
    const double rho = std::sqrt(p.xi * p.eta);
    return {rho * std::cos(p.phi), rho * std::sin(p.phi), 0.5 * (p.xi - p.eta)};
}

double phi_factor(int n, double m, double epsilon, double x) {
    if (n < 0) throw DomainError("phi_factor: n must be nonnegative");
    if (!(m >= 0.0)) throw DomainError("phi_factor: m must be nonnegative");
    if (!(epsilon > 0.0)) throw DomainError("phi_factor: epsilon must be positive");
    if (!(x >= 0.0)) throw DomainError("phi_factor: x must be nonnegative");
    const double t = epsilon * x;
    const double ln_pref =
        -specfun::ln_gamma(m + 1.0) + 0.5 * (specfun::ln_gamma(n + m + 1.0) - specfun::ln_factorial(n));
    const double f = specfun::kummer_m_terminating(-n, m + 1.0, t);
    if (t == 0.0) return m == 0.0 ? std::exp(ln_pref) * f : 0.0;
    return std::exp(ln_pref - 0.5 * t + 0.5 * m * std::log(t)) * f;
}

Energy parabolic_energy(const ModelParams& params, const ParabolicState& state) {
    return energy(params, state.m, principal_number(params, state));
}

double beta_eigenvalue(const ModelParams& params, const ParabolicState& state) {
    const double eps = parabolic_energy(params, state).epsilon;
    const Exponents e = derived_exponents(params, state.m);
    const double diff = (state.m - params.s).abs().value();
    const double sum = (state.m + params.s).abs().value();
    return eps * (state.n1 - state.n2 + 0.5 * (diff - sum + e.delta1 - e.delta2));
}

std::array<double, 2> parabolic_labels_from_beta(const ModelParams& params, HalfInt m, double beta,
                                                 double epsilon) {
    const Exponents e = derived_exponents(params, m);
    const double diff = (m - params.s).abs().value();
    const double sum = (m + params.s).abs().value();
    return {-0.5 * (diff + e.delta1 + 1.0) + (beta + 1.0) / (2.0 * epsilon),
            -0.5 * (sum + e.delta2 + 1.0) - (beta - 1.0) / (2.0 * epsilon)};
}

std::complex<double> parabolic_state_eval(const ModelParams& params, const ParabolicState& state,
                                          const ParabolicPoint& p) {
    const double eps = parabolic_energy(params, state).epsilon;
    const Exponents e = derived_exponents(params, state.m);
    const double amp = std::sqrt(2.0) * eps * eps * phi_factor(state.n1, e.m1, eps, p.xi) *
                       phi_factor(state.n2, e.m2, eps, p.eta) / std::sqrt(2.0 * std::numbers::pi);
    return amp * std::polar(1.0, (state.m - params.s).value() * p.phi);
}

}  // namespace ringkepler
