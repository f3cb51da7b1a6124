#include "ringkepler/spherical.hpp"

#include <cmath>
#include <numbers>

#include "ringkepler/error.hpp"
#include "ringkepler/specfun.hpp"

namespace ringkepler {

namespace {

using specfun::ln_gamma;

void check_angular_labels(const ModelParams& params, HalfInt j, HalfInt m) {
    // n = j + 1 is the smallest admissible principal number; reuse the state check.
    check_state(params, SphericalState{j + HalfInt::from_int(1), j, m});
}

int as_int(HalfInt h) { return h.twice() / 2; }

}  // namespace

double separation_constant(const ModelParams& params, HalfInt j, HalfInt m) {
    check_angular_labels(params, j, m);
    const Exponents e = derived_exponents(params, m);
    const double l_eff = j.value() + e.delta_mean();
    return l_eff * (l_eff + 1.0);
}

double ln_angular_norm(const ModelParams& params, HalfInt j, HalfInt m) {
    check_angular_labels(params, j, m);
    const Exponents e = derived_exponents(params, m);
    const double d = e.delta1 + e.delta2;
    const double jv = j.value();
    const double mp = e.m_plus.value();
    const double mm = e.m_minus.value();
    const int k = as_int(j - e.m_plus);
    const double ln_sq = std::log(2.0 * jv + d + 1.0) + specfun::ln_factorial(k) +
                         ln_gamma(jv + mp + d + 1.0) - std::log(4.0 * std::numbers::pi) -
                         ln_gamma(jv - mm + e.delta1 + 1.0) - ln_gamma(jv + mm + e.delta2 + 1.0);
    return 0.5 * ln_sq;
}

double angular_norm(const ModelParams& params, HalfInt j, HalfInt m) {
    return std::exp(ln_angular_norm(params, j, m));
}

AngularValue ring_harmonic(const ModelParams& params, HalfInt j, HalfInt m, double theta, double phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw DomainError("ring_harmonic: theta must lie in [0, pi]");
    }
    const double ln_norm = ln_angular_norm(params, j, m);
    const Exponents e = derived_exponents(params, m);
    const int k = as_int(j - e.m_plus);
    const std::complex<double> phase = std::polar(1.0, (m - params.s).value() * phi);

    AngularValue out;
    if (theta == 0.0 || theta == std::numbers::pi) {
        out.at_pole = true;
        const bool north = theta == 0.0;
        const double vanishing_exponent = north ? e.m2 : e.m1;
        if (vanishing_exponent > 0.0) {
            out.value = 0.0;
        } else {
            out.value = std::exp(ln_norm) * specfun::jacobi_p(k, e.m2, e.m1, north ? 1.0 : -1.0) * phase;
        }
        return out;
    }
    const double half = 0.5 * theta;
    const double ln_amp = ln_norm + e.m1 * std::log(std::cos(half)) + e.m2 * std::log(std::sin(half));
    out.value = std::exp(ln_amp) * specfun::jacobi_p(k, e.m2, e.m1, std::cos(theta)) * phase;
    return out;
}

double ln_radial_norm(const ModelParams& params, HalfInt n, HalfInt j, HalfInt m) {
    check_state(params, SphericalState{n, j, m});
    const Exponents e = derived_exponents(params, m);
    const double eps = energy(params, m, n).epsilon;
    const double d = e.delta1 + e.delta2;
    const double jv = j.value();
    const int radial_nodes = as_int(n - j - HalfInt::from_int(1));
    return std::log(2.0) + 2.0 * std::log(eps) - ln_gamma(2.0 * jv + d + 2.0) +
           0.5 * (ln_gamma(n.value() + jv + d + 1.0) - specfun::ln_factorial(radial_nodes));
}

double radial_norm(const ModelParams& params, HalfInt n, HalfInt j, HalfInt m) {
    return std::exp(ln_radial_norm(params, n, j, m));
}

double radial_wavefunction(const ModelParams& params, HalfInt n, HalfInt j, HalfInt m, double r) {
    if (!(r > 0.0)) throw DomainError("radial_wavefunction: r must be positive");
    const double ln_c = ln_radial_norm(params, n, j, m);
    const Exponents e = derived_exponents(params, m);
    const double eps = energy(params, m, n).epsilon;
    const double l_eff = j.value() + e.delta_mean();
    const double t = 2.0 * eps * r;
    const int radial_nodes = as_int(n - j - HalfInt::from_int(1));
    const double f = specfun::kummer_m_terminating(-radial_nodes, 2.0 * l_eff + 2.0, t);
    return std::exp(ln_c + l_eff * std::log(t) - 0.5 * t) * f;
}

std::complex<double> spherical_state_eval(const ModelParams& params, const SphericalState& state,
                                          const SphericalPoint& point) {
    const double radial = radial_wavefunction(params, state.n, state.j, state.m, point.r);
    return radial * ring_harmonic(params, state.j, state.m, point.theta, point.phi).value;
}

}  // namespace ringkepler
