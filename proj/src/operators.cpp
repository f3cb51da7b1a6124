#include "ringkepler/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ringkepler/error.hpp"
#include "ringkepler/parabolic.hpp"

namespace ringkepler {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Derivs {
    double d1;
    double d2;
};

Derivs derivs_at(const Grid1D& g, const std::vector<double>& v, std::size_t i) {
    const Stencil s = central_stencil(g, i);
    // The weights sum to zero; the difference form keeps constants exact.
    const double lo = v[i - 1] - v[i];
    const double hi = v[i + 1] - v[i];
    return {s.d1[0] * lo + s.d1[2] * hi, s.d2[0] * lo + s.d2[2] * hi};
}

OperatorTerms blank(std::size_t n) {
    return {std::vector<double>(n, kNaN), std::vector<double>(n, kNaN)};
}

void require_positive(const Grid1D& g, const char* what) {
    if (!(g.front() > 0.0)) throw DomainError(std::string(what) + ": grid must lie in (0, inf)");
}

OperatorTerms parabolic_terms(double mi, double E, const SampledFunction& f, const char* what) {
    require_positive(f.grid, what);
    const auto& x = f.grid.nodes();
    OperatorTerms out = blank(x.size());
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const Derivs d = derivs_at(f.grid, f.values, i);
        out.derivative[i] = -2.0 * (x[i] * d.d2 + d.d1);
        out.potential[i] = -2.0 * (0.5 * E * x[i] - mi * mi / (4.0 * x[i]) + 0.5) * f.values[i];
    }
    return out;
}

SampledFunction to_sampled(const Grid1D& g, const OperatorTerms& t) { return SampledFunction(g, t.total()); }

}  // namespace

std::vector<double> OperatorTerms::total() const {
    std::vector<double> out(derivative.size());
    std::transform(derivative.begin(), derivative.end(), potential.begin(), out.begin(), std::plus<>());
    return out;
}

OperatorTerms angular_terms(const ModelParams& params, HalfInt m, const SampledFunction& f) {
    const Exponents e = derived_exponents(params, m);
    const auto& t = f.grid.nodes();
    if (!(t.front() > 0.0 && t.back() < std::numbers::pi)) throw DomainError("apply_angular: grid must lie in (0, pi)");
    OperatorTerms out = blank(t.size());
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        const Derivs d = derivs_at(f.grid, f.values, i);
        const double c = std::cos(0.5 * t[i]);
        const double s = std::sin(0.5 * t[i]);
        out.derivative[i] = -(d.d2 + std::cos(t[i]) / std::sin(t[i]) * d.d1);
        out.potential[i] = (e.m1 * e.m1 / (4.0 * c * c) + e.m2 * e.m2 / (4.0 * s * s)) * f.values[i];
    }
    return out;
}

SampledFunction apply_angular(const ModelParams& params, HalfInt m, const SampledFunction& f) {
    return to_sampled(f.grid, angular_terms(params, m, f));
}

OperatorTerms radial_terms(double A, const SampledFunction& f) {
    require_positive(f.grid, "apply_radial");
    const auto& r = f.grid.nodes();
    OperatorTerms out = blank(r.size());
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        const Derivs d = derivs_at(f.grid, f.values, i);
        out.derivative[i] = d.d2 + 2.0 / r[i] * d.d1;
        out.potential[i] = (2.0 / r[i] - A / (r[i] * r[i])) * f.values[i];
    }
    return out;
}

SampledFunction apply_radial(double A, const SampledFunction& f) { return to_sampled(f.grid, radial_terms(A, f)); }

OperatorTerms parabolic_xi_terms(const ModelParams& params, HalfInt m, double E, const SampledFunction& f) {
    return parabolic_terms(derived_exponents(params, m).m1, E, f, "apply_parabolic_xi");
}

SampledFunction apply_parabolic_xi(const ModelParams& params, HalfInt m, double E, const SampledFunction& f) {
    return to_sampled(f.grid, parabolic_xi_terms(params, m, E, f));
}

OperatorTerms parabolic_eta_terms(const ModelParams& params, HalfInt m, double E, const SampledFunction& f) {
    return parabolic_terms(derived_exponents(params, m).m2, E, f, "apply_parabolic_eta");
}

SampledFunction apply_parabolic_eta(const ModelParams& params, HalfInt m, double E, const SampledFunction& f) {
    return to_sampled(f.grid, parabolic_eta_terms(params, m, E, f));
}

double x_reduced_potential(const ModelParams& params, HalfInt m, double xi, double eta) {
    const double sum = xi + eta;
    const double mp = (m + params.s).value();
    const double mm = (m - params.s).value();
    return -(xi * xi * mp * mp - eta * eta * mm * mm) / (2.0 * xi * eta * sum) +
           2.0 * params.c1 * eta / (xi * sum) - 2.0 * params.c2 * xi / (eta * sum) + (xi - eta) / sum;
}

SampledFunction2D apply_x_reduced(const ModelParams& params, HalfInt m, const SampledFunction2D& f) {
    derived_exponents(params, m);
    require_positive(f.xi, "apply_x_reduced");
    require_positive(f.eta, "apply_x_reduced");
    const std::size_t nx = f.xi.size();
    const std::size_t ny = f.eta.size();
    std::vector<Stencil> sx(nx), sy(ny);
    for (std::size_t i = 1; i + 1 < nx; ++i) sx[i] = central_stencil(f.xi, i);
    for (std::size_t k = 1; k + 1 < ny; ++k) sy[k] = central_stencil(f.eta, k);

    std::vector<double> out(nx * ny, kNaN);
    const auto& v = f.values;
    for (std::size_t i = 1; i + 1 < nx; ++i) {
        const double xi = f.xi[i];
        for (std::size_t k = 1; k + 1 < ny; ++k) {
            const double eta = f.eta[k];
            const std::size_t c = i * ny + k;
            const Stencil& a = sx[i];
            const Stencil& b = sy[k];
            const double xl = v[c - ny] - v[c];
            const double xh = v[c + ny] - v[c];
            const double yl = v[c - 1] - v[c];
            const double yh = v[c + 1] - v[c];
            const double fx1 = a.d1[0] * xl + a.d1[2] * xh;
            const double fx2 = a.d2[0] * xl + a.d2[2] * xh;
            const double fy1 = b.d1[0] * yl + b.d1[2] * yh;
            const double fy2 = b.d2[0] * yl + b.d2[2] * yh;
            const double mixed = xi * (eta * fy2 + fy1) - eta * (xi * fx2 + fx1);
            out[c] = 2.0 / (xi + eta) * mixed + x_reduced_potential(params, m, xi, eta) * v[c];
        }
    }
    return SampledFunction2D(f.xi, f.eta, std::move(out));
}

double x_cartesian_consistency(const ModelParams& params, HalfInt m,
                               const std::vector<std::array<double, 3>>& points) {
    derived_exponents(params, m);
    const double s = params.s.value();
    // The Cartesian form acts on the e^{i(m-s)phi} section, the parabolic one on e^{i m phi}.
    const double k_cart = (m - params.s).value();
    double worst = 0.0;
    for (const auto& pt : points) {
        const ParabolicPoint p = to_parabolic(pt[0], pt[1], pt[2]);
        const double rho2 = pt[0] * pt[0] + pt[1] * pt[1];
        const double z = pt[2];
        const double r = std::sqrt(rho2 + z * z);
        const double rpz = p.xi;  // r + z without cancellation
        const double rmz = p.eta;
        const double xi = p.xi;
        const double eta = p.eta;
        const double sum = xi + eta;

        const double identity = std::max(std::abs(r + z - xi) / r, std::abs(r - z - eta) / r);
        const double c1_cart = params.c1 * rmz / (r * rpz);
        const double c1_par = 2.0 * params.c1 * eta / (xi * sum);
        const double c2_cart = params.c2 * rpz / (r * rmz);
        const double c2_par = 2.0 * params.c2 * xi / (eta * sum);
        const double z_cart = z / r;
        const double z_par = (xi - eta) / sum;
        // z (d_x^2 + d_y^2) contributes z/rho^2 d_phi^2; the s terms follow the flags.
        const double az_cart = -z / rho2 * k_cart * k_cart - s * k_cart * rpz / (r * rmz) - s * s * rpz / (r * rmz);
        const double mv = m.value();
        const double az_par = -(xi - eta) / (2.0 * xi * eta) * mv * mv - s * mv * (xi * xi + eta * eta) / (xi * eta * sum) -
                              s * s * (xi - eta) / (2.0 * xi * eta);
        worst = std::max({worst, identity, std::abs(c1_cart - c1_par), std::abs(c2_cart - c2_par),
                          std::abs(z_cart - z_par), std::abs(az_cart - az_par)});
    }
    return worst;
}

}  // namespace ringkepler
