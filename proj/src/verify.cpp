#include "ringkepler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "ringkepler/error.hpp"
#include "ringkepler/operators.hpp"
#include "ringkepler/parabolic.hpp"
#include "ringkepler/quadrature.hpp"
#include "ringkepler/spherical.hpp"

namespace ringkepler {

namespace {

constexpr double kPi = std::numbers::pi;

// Number of eigenvalues of K - lambda M below zero, from the signs of the
// LDL^T pivots (Sylvester inertia).
int count_below(const std::vector<double>& diag, const std::vector<double>& off, const std::vector<double>& mass,
                double lambda) {
    int negative = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double a = diag[i] - lambda * mass[i];
        if (i > 0) a -= off[i - 1] * off[i - 1] / d;
        if (a == 0.0) a = -std::numeric_limits<double>::min();
        if (a < 0.0) ++negative;
        d = a;
    }
    return negative;
}

}  // namespace

std::vector<double> pencil_lowest(const std::vector<double>& diag, const std::vector<double>& off,
                                  const std::vector<double>& mass, int k) {
    const std::size_t n = diag.size();
    if (off.size() + 1 != n || mass.size() != n) throw DomainError("pencil_lowest: inconsistent sizes");
    if (k < 0 || static_cast<std::size_t>(k) > n) throw RangeError("pencil_lowest: grid too small for the requested states");

    // Gershgorin bounds of M^{-1/2} K M^{-1/2}.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(off[i - 1]) / std::sqrt(mass[i] * mass[i - 1]);
        if (i + 1 < n) radius += std::abs(off[i]) / std::sqrt(mass[i] * mass[i + 1]);
        lo = std::min(lo, diag[i] / mass[i] - radius);
        hi = std::max(hi, diag[i] / mass[i] + radius);
    }

    std::vector<double> out;
    out.reserve(k);
    double floor = lo;
    for (int idx = 0; idx < k; ++idx) {
        double a = floor;
        double b = hi;
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (count_below(diag, off, mass, mid) > idx) {
                b = mid;
            } else {
                a = mid;
            }
        }
        const double value = 0.5 * (a + b);
        out.push_back(value);
        floor = a;
    }
    return out;
}

Grid1D default_radial_grid(double A, int k, std::size_t nodes) {
    const double l_est = -0.5 + std::sqrt(A + 0.25);
    const double r_max = (36.0 + 3.0 * k) * (k + l_est);
    return Grid1D::origin_log(1e-3, r_max, nodes);
}

EigenResult fd_radial_spectrum(double A, const Grid1D& grid, int k) {
    if (!(grid.front() >= 0.0)) throw DomainError("fd_radial_spectrum: grid must start at r >= 0");
    const auto& r = grid.nodes();
    const std::size_t n = r.size() - 2;
    std::vector<double> diag(n), off(n - 1), mass(n);
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        const double hm = r[i] - r[i - 1];
        const double hp = r[i + 1] - r[i];
        const double w = 0.5 * (hm + hp);
        const double v = A / (2.0 * r[i] * r[i]) - 1.0 / r[i];
        mass[i - 1] = w;
        diag[i - 1] = 0.5 * (1.0 / hm + 1.0 / hp) + v * w;
        if (i + 2 < r.size()) off[i - 1] = -0.5 / hp;
    }
    return {pencil_lowest(diag, off, mass, k), grid, "radial finite differences, u = rR, Dirichlet ends"};
}

EigenResult fd_radial_spectrum(const ModelParams& params, HalfInt j, HalfInt m, int k, std::size_t nodes) {
    const double A = separation_constant(params, j, m);
    return fd_radial_spectrum(A, default_radial_grid(A, k, nodes), k);
}

EigenResult fd_angular_spectrum(const ModelParams& params, HalfInt m, int k, std::size_t cells) {
    const Exponents e = derived_exponents(params, m);
    Grid1D grid = Grid1D::theta_cells(cells);
    const double h = kPi / static_cast<double>(cells);
    std::vector<double> diag(cells), off(cells - 1), mass(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double t = grid[i];
        const double left = std::sin(static_cast<double>(i) * h);
        const double right = i + 1 < cells ? std::sin(static_cast<double>(i + 1) * h) : 0.0;
        const double c = std::cos(0.5 * t);
        const double s = std::sin(0.5 * t);
        const double v = e.m1 * e.m1 / (4.0 * c * c) + e.m2 * e.m2 / (4.0 * s * s);
        mass[i] = std::sin(t) * h;
        diag[i] = (left + right) / h + v * mass[i];
        if (i + 1 < cells) off[i] = -right / h;
    }
    return {pencil_lowest(diag, off, mass, k), std::move(grid), "angular finite volumes, sin(theta) measure"};
}

// ---------------------------------------------------------------- overlaps

namespace {

class OverlapEngine {
public:
    OverlapEngine(const ModelParams& params, const QuadratureSettings& q)
        : params_(params), q_(q), legendre_(gauss_legendre(q.angular_nodes)) {}

    std::complex<double> overlap(const BasisState& a, const BasisState& b) {
        const HalfInt ma = std::visit([](const auto& s) { return s.m; }, a);
        const HalfInt mb = std::visit([](const auto& s) { return s.m; }, b);
        std::visit([&](const auto& s) { check_state(params_, s); }, a);
        std::visit([&](const auto& s) { check_state(params_, s); }, b);
        if (ma != mb) return 0.0;
        if (std::holds_alternative<SphericalState>(a) && std::holds_alternative<SphericalState>(b)) {
            return spherical_pair(std::get<SphericalState>(a), std::get<SphericalState>(b));
        }
        return parabolic_pair(a, b);
    }

private:
    const QuadratureRule& laguerre(double alpha, int n) {
        auto key = std::make_pair(alpha, n);
        auto it = laguerre_.find(key);
        if (it == laguerre_.end()) it = laguerre_.emplace(key, gauss_laguerre(n, alpha)).first;
        return it->second;
    }

    // theta-dependent part of Z_jm at phi = 0 on the Gauss-Legendre theta nodes
    const std::vector<double>& angular_samples(HalfInt j, HalfInt m) {
        auto key = std::make_pair(j, m);
        auto it = angular_.find(key);
        if (it != angular_.end()) return it->second;
        std::vector<double> v;
        v.reserve(legendre_.nodes.size());
        for (double x : legendre_.nodes) {
            v.push_back(ring_harmonic(params_, j, m, 0.5 * kPi * (1.0 + x), 0.0).value.real());
        }
        return angular_.emplace(key, std::move(v)).first->second;
    }

    double spherical_pair(const SphericalState& a, const SphericalState& b) {
        const Exponents e = derived_exponents(params_, a.m);
        const double ea = energy(params_, a.m, a.n).epsilon;
        const double eb = energy(params_, b.m, b.n).epsilon;
        const double lam = ea + eb;
        const double alpha = a.j.value() + b.j.value() + e.delta1 + e.delta2 + 2.0;
        const QuadratureRule& rule = laguerre(alpha, q_.radial_nodes);
        double radial = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = rule.nodes[k];
            const double r = x / lam;
            const double ra = radial_wavefunction(params_, a.n, a.j, a.m, r);
            const double rb = radial_wavefunction(params_, b.n, b.j, b.m, r);
            radial += rule.weights[k] * ra * rb * r * r * std::exp(x - alpha * std::log(x));
        }
        radial /= lam;

        const auto& za = angular_samples(a.j, a.m);
        const auto& zb = angular_samples(b.j, b.m);
        double angular = 0.0;
        for (std::size_t k = 0; k < legendre_.nodes.size(); ++k) {
            const double t = 0.5 * kPi * (1.0 + legendre_.nodes[k]);
            angular += legendre_.weights[k] * za[k] * zb[k] * std::sin(t);
        }
        angular *= 0.5 * kPi;
        return 2.0 * kPi * radial * angular;
    }

    static double state_epsilon(const ModelParams& p, const BasisState& s) {
        if (const auto* sp = std::get_if<SphericalState>(&s)) return energy(p, sp->m, sp->n).epsilon;
        return parabolic_energy(p, std::get<ParabolicState>(s)).epsilon;
    }

    std::complex<double> eval(const BasisState& s, double xi, double eta) const {
        if (const auto* pp = std::get_if<ParabolicState>(&s)) {
            return parabolic_state_eval(params_, *pp, ParabolicPoint{xi, eta, 0.0});
        }
        const SphericalPoint p{0.5 * (xi + eta), 2.0 * std::atan2(std::sqrt(eta), std::sqrt(xi)), 0.0};
        return spherical_state_eval(params_, std::get<SphericalState>(s), p);
    }

    std::complex<double> parabolic_pair(const BasisState& a, const BasisState& b) {
        const HalfInt m = std::visit([](const auto& s) { return s.m; }, a);
        const Exponents e = derived_exponents(params_, m);
        const double lam = 0.5 * (state_epsilon(params_, a) + state_epsilon(params_, b));
        const QuadratureRule& rx = laguerre(e.m1, q_.parabolic_nodes);
        const QuadratureRule& ry = laguerre(e.m2, q_.parabolic_nodes);
        std::complex<double> sum = 0.0;
        for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
            const double u = rx.nodes[i];
            const double xi = u / lam;
            const double wu = rx.weights[i] * std::exp(u - e.m1 * std::log(u));
            for (std::size_t k = 0; k < ry.nodes.size(); ++k) {
                const double v = ry.nodes[k];
                const double eta = v / lam;
                const double wv = ry.weights[k] * std::exp(v - e.m2 * std::log(v));
                sum += wu * wv * 0.25 * (xi + eta) * std::conj(eval(a, xi, eta)) * eval(b, xi, eta);
            }
        }
        return 2.0 * kPi * sum / (lam * lam);
    }

    ModelParams params_;
    QuadratureSettings q_;
    QuadratureRule legendre_;
    std::map<std::pair<double, int>, QuadratureRule> laguerre_;
    std::map<std::pair<HalfInt, HalfInt>, std::vector<double>> angular_;
};

}  // namespace

std::complex<double> quad_overlap(const ModelParams& params, const BasisState& a, const BasisState& b,
                                  const QuadratureSettings& q) {
    OverlapEngine engine(params, q);
    return engine.overlap(a, b);
}

Eigen::MatrixXcd quad_overlap(const ModelParams& params, const std::vector<BasisState>& as,
                              const std::vector<BasisState>& bs, const QuadratureSettings& q) {
    OverlapEngine engine(params, q);
    Eigen::MatrixXcd out(as.size(), bs.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t k = 0; k < bs.size(); ++k) out(i, k) = engine.overlap(as[i], bs[k]);
    }
    return out;
}

double identity_defect(const Eigen::MatrixXcd& gram) {
    if (gram.rows() != gram.cols()) throw DomainError("identity_defect: matrix must be square");
    const Eigen::MatrixXcd diff = gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
    return diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
}

InterbasisResult interbasis_matrix(const ModelParams& params, HalfInt n, HalfInt m, const QuadratureSettings& q) {
    InterbasisResult out;
    for (const auto& p : enumerate_parabolic(params, n)) {
        if (p.m == m) out.parabolic.push_back(p);
    }
    for (const auto& s : enumerate_spherical(params, n)) {
        if (s.m == m) out.spherical.push_back(s);
    }
    if (out.parabolic.empty() || out.spherical.empty()) {
        throw RangeError("interbasis_matrix: m = " + m.str() + " is not allowed at n = " + n.str());
    }
    std::vector<BasisState> as(out.parabolic.begin(), out.parabolic.end());
    std::vector<BasisState> bs(out.spherical.begin(), out.spherical.end());
    out.matrix = quad_overlap(params, as, bs, q);
    out.unitarity_defect = identity_defect(out.matrix * out.matrix.adjoint());
    return out;
}

// --------------------------------------------------------------- residuals

std::string_view to_string(ResidualKind k) {
    switch (k) {
        case ResidualKind::radial: return "radial";
        case ResidualKind::angular: return "angular";
        case ResidualKind::parabolic_xi: return "parabolic_xi";
        case ResidualKind::parabolic_eta: return "parabolic_eta";
    }
    return "radial";
}

namespace {

double weighted_residual(const OperatorTerms& t, const std::vector<double>& f, double lambda,
                         const std::vector<double>& rho) {
    double num = 0.0;
    double den = 0.0;
    double size = 0.0;
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        const double res = t.derivative[i] + t.potential[i] - lambda * f[i];
        num = std::max(num, rho[i] * std::abs(res));
        den = std::max(den, rho[i] * (std::abs(t.derivative[i]) + std::abs(t.potential[i]) + std::abs(lambda * f[i])));
        size = std::max(size, rho[i] * std::abs(f[i]));
    }
    // An operator that annihilates f leaves only rounding in every term;
    // measure against f itself then.
    if (den <= 1e-12 * size) den = size;
    return den > 0.0 ? num / den : 0.0;
}

}  // namespace

double closed_form_residual(const ModelParams& params, ResidualKind kind, const BasisState& state, std::size_t nodes) {
    if (kind == ResidualKind::radial || kind == ResidualKind::angular) {
        const auto* sp = std::get_if<SphericalState>(&state);
        if (!sp) throw DomainError("closed_form_residual: radial and angular residuals need a spherical state");
        check_state(params, *sp);
        if (kind == ResidualKind::radial) {
            const Energy en = energy(params, sp->m, sp->n);
            const double A = separation_constant(params, sp->j, sp->m);
            const Grid1D g = Grid1D::log_uniform(1e-4 / en.epsilon, 60.0 / en.epsilon, nodes);
            const auto f = SampledFunction::sample(g, [&](double r) {
                return radial_wavefunction(params, sp->n, sp->j, sp->m, r);
            });
            std::vector<double> rho(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) rho[i] = std::pow(g[i], 2.5);
            return weighted_residual(radial_terms(A, f), f.values, -2.0 * en.value, rho);
        }
        const double A = separation_constant(params, sp->j, sp->m);
        const Grid1D g = Grid1D::log_tan(-10.0, 10.0, nodes);
        const auto f = SampledFunction::sample(g, [&](double t) {
            return ring_harmonic(params, sp->j, sp->m, t, 0.0).value.real();
        });
        std::vector<double> rho(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) rho[i] = std::pow(std::sin(g[i]), 2);
        return weighted_residual(angular_terms(params, sp->m, f), f.values, A, rho);
    }

    const auto* pp = std::get_if<ParabolicState>(&state);
    if (!pp) throw DomainError("closed_form_residual: parabolic residuals need a parabolic state");
    check_state(params, *pp);
    const Energy en = parabolic_energy(params, *pp);
    const Exponents e = derived_exponents(params, pp->m);
    const double beta = beta_eigenvalue(params, *pp);
    const Grid1D g = Grid1D::log_uniform(1e-4 / en.epsilon, 80.0 / en.epsilon, nodes);
    const bool xi = kind == ResidualKind::parabolic_xi;
    const auto f = SampledFunction::sample(g, [&](double x) {
        return xi ? phi_factor(pp->n1, e.m1, en.epsilon, x) : phi_factor(pp->n2, e.m2, en.epsilon, x);
    });
    const OperatorTerms t = xi ? parabolic_xi_terms(params, pp->m, en.value, f)
                               : parabolic_eta_terms(params, pp->m, en.value, f);
    return weighted_residual(t, f.values, xi ? beta : -beta, g.nodes());
}

ResidualResult residual_convergence(const ModelParams& params, ResidualKind kind, const BasisState& state,
                                    std::size_t nodes) {
    ResidualResult out;
    out.coarse = closed_form_residual(params, kind, state, nodes);
    out.fine = closed_form_residual(params, kind, state, 2 * nodes);
    out.slope = out.fine > 0.0 ? std::log2(out.coarse / out.fine) : 0.0;
    return out;
}

double x_rayleigh_quotient(const ModelParams& params, const ParabolicState& state, const Grid1D& grid) {
    const Energy en = parabolic_energy(params, state);
    const Exponents e = derived_exponents(params, state.m);
    const std::size_t nodes = grid.size();
    std::vector<double> f1(nodes), f2(nodes), w(nodes, 0.0);
    for (std::size_t i = 0; i < nodes; ++i) {
        f1[i] = phi_factor(state.n1, e.m1, en.epsilon, grid[i]);
        f2[i] = phi_factor(state.n2, e.m2, en.epsilon, grid[i]);
        if (i > 0 && i + 1 < nodes) w[i] = 0.5 * (grid[i + 1] - grid[i - 1]);
    }
    std::vector<double> values(nodes * nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        for (std::size_t k = 0; k < nodes; ++k) values[i * nodes + k] = f1[i] * f2[k];
    }
    const SampledFunction2D f(grid, grid, std::move(values));
    const SampledFunction2D xf = apply_x_reduced(params, state.m, f);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 1; i + 1 < nodes; ++i) {
        for (std::size_t k = 1; k + 1 < nodes; ++k) {
            const double weight = w[i] * w[k] * 0.25 * (grid[i] + grid[k]);
            const double v = f.at(i, k);
            num += weight * v * xf.at(i, k);
            den += weight * v * v;
        }
    }
    return num / den;
}

Grid1D default_x_grid(double epsilon, std::size_t nodes) {
    return Grid1D::log_uniform(1e-4 / epsilon, 70.0 / epsilon, nodes);
}

double x_rayleigh_beta(const ModelParams& params, const ParabolicState& state, std::size_t nodes) {
    const double eps = parabolic_energy(params, state).epsilon;
    const double coarse = x_rayleigh_quotient(params, state, default_x_grid(eps, nodes));
    const double fine = x_rayleigh_quotient(params, state, default_x_grid(eps, 2 * nodes - 1));
    return (4.0 * fine - coarse) / 3.0;
}

// ------------------------------------------------------------------ report

std::string_view to_string(CompareKind k) {
    switch (k) {
        case CompareKind::absolute: return "absolute";
        case CompareKind::relative: return "relative";
        case CompareKind::exact: return "exact";
    }
    return "absolute";
}

bool VerificationReport::all_passed() const { return failed_count() == 0; }

std::size_t VerificationReport::failed_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

namespace {

class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& r) : r_(r) {}

    void add(std::string name, std::string category, double closed_form, double oracle, double tol, CompareKind kind) {
        CheckRecord c;
        c.name = std::move(name);
        c.category = std::move(category);
        c.closed_form = closed_form;
        c.oracle = oracle;
        c.abs_dev = std::abs(closed_form - oracle);
        c.rel_dev = closed_form != 0.0 ? c.abs_dev / std::abs(closed_form) : c.abs_dev;
        c.compare = kind;
        switch (kind) {
            case CompareKind::absolute: c.tolerance = tol; c.passed = c.abs_dev <= tol; break;
            case CompareKind::relative: c.tolerance = tol; c.passed = c.rel_dev <= tol; break;
            case CompareKind::exact: c.tolerance = 0.0; c.passed = closed_form == oracle; break;
        }
        if (std::isnan(oracle) || std::isnan(closed_form)) c.passed = false;
        r_.checks.push_back(std::move(c));
    }

    // Runs body; a thrown exception becomes a failed record instead of escaping.
    template <class F>
    void guarded(const std::string& name, const std::string& category, F&& body) {
        try {
            body();
        } catch (const std::exception&) {
            add(name, category, 0.0, std::numeric_limits<double>::quiet_NaN(), 0.0, CompareKind::absolute);
        }
    }

private:
    VerificationReport& r_;
};

std::string label(const char* key, HalfInt v) { return std::string(key) + "=" + v.str(); }
std::string label(const char* key, int v) { return std::string(key) + "=" + std::to_string(v); }

}  // namespace

VerificationReport run_verification(const ModelParams& params_in, HalfInt n_max, const Tolerances& tol,
                                    const VerificationSettings& settings) {
    const ModelParams params = validate_params(params_in.s, params_in.c1, params_in.c2);
    const HalfInt one = HalfInt::from_int(1);
    const HalfInt n_min = params.s.abs() + one;
    if (n_max < n_min) throw RangeError("run_verification: n_max must be at least |s| + 1 = " + n_min.str());

    VerificationReport report;
    report.params = params;
    report.n_max = n_max;
    report.tolerances = tol;
    ReportBuilder rb(report);

    std::vector<HalfInt> levels;
    for (HalfInt n = n_min; n <= n_max; n = n + one) levels.push_back(n);
    const HalfInt n_top = levels.back();
    const std::vector<HalfInt> ms = allowed_m(params, n_top);

    // Energies from the radial oracle, one eigen solve per (j, m).
    for (HalfInt m : ms) {
        const Exponents e = derived_exponents(params, m);
        for (HalfInt j = e.m_plus; j + one <= n_top; j = j + one) {
            const int k = (n_top - j).twice() / 2;
            const std::string base = label("j", j) + " " + label("m", m);
            rb.guarded("radial_fd " + base, "spectrum", [&] {
                const EigenResult fd = fd_radial_spectrum(params, j, m, k, settings.radial_nodes);
                for (int i = 0; i < k; ++i) {
                    const HalfInt n = j + one + HalfInt::from_int(i);
                    rb.add("radial_fd " + label("n", n) + " " + base, "spectrum", energy(params, m, n).value,
                           fd.eigenvalues[i], tol.fd, CompareKind::relative);
                }
            });
        }
    }

    // Separation constants and their multiplicity at the top level.
    for (HalfInt m : ms) {
        const Exponents e = derived_exponents(params, m);
        const int count = (n_top - e.m_plus).twice() / 2;
        rb.guarded("angular_fd " + label("m", m), "angular", [&] {
            const int k = std::max(count + 1, 4);
            const EigenResult fd = fd_angular_spectrum(params, m, k, settings.angular_cells);
            for (int i = 0; i < k; ++i) {
                const HalfInt j = e.m_plus + HalfInt::from_int(i);
                rb.add("angular_fd " + label("j", j) + " " + label("m", m), "angular",
                       separation_constant(params, j, m), fd.eigenvalues[i], tol.fd, CompareKind::absolute);
            }
            const double cut = 0.5 * (separation_constant(params, n_top - one, m) + separation_constant(params, n_top, m));
            const auto below = std::count_if(fd.eigenvalues.begin(), fd.eigenvalues.end(), [&](double a) { return a < cut; });
            const auto top = enumerate_spherical(params, n_top);
            const auto listed = std::count_if(top.begin(), top.end(), [&](const SphericalState& s) { return s.m == m; });
            rb.add("degeneracy " + label("n", n_top) + " " + label("m", m), "degeneracy", static_cast<double>(listed),
                   static_cast<double>(below), 0.0, CompareKind::exact);
        });
    }

    // Orthonormality of the whole spherical set.
    rb.guarded("orthonormality spherical", "orthonormality", [&] {
        std::vector<BasisState> all;
        for (HalfInt n : levels) {
            for (const auto& s : enumerate_spherical(params, n)) all.emplace_back(s);
        }
        const Eigen::MatrixXcd gram = quad_overlap(params, all, all, settings.quadrature);
        rb.add("orthonormality spherical " + label("n_max", n_top), "orthonormality", 0.0, identity_defect(gram),
               tol.quadrature, CompareKind::absolute);
    });

    for (HalfInt n : levels) {
        for (HalfInt m : allowed_m(params, n)) {
            const std::string base = label("n", n) + " " + label("m", m);
            rb.guarded("interbasis " + base, "interbasis", [&] {
                const InterbasisResult ib = interbasis_matrix(params, n, m, settings.quadrature);
                const double dim = (n - derived_exponents(params, m).m_plus).value();
                rb.add("block_dim parabolic " + base, "interbasis", dim, static_cast<double>(ib.parabolic.size()), 0.0,
                       CompareKind::exact);
                rb.add("block_dim spherical " + base, "interbasis", dim, static_cast<double>(ib.spherical.size()), 0.0,
                       CompareKind::exact);
                std::vector<BasisState> par(ib.parabolic.begin(), ib.parabolic.end());
                const Eigen::MatrixXcd gram = quad_overlap(params, par, par, settings.quadrature);
                rb.add("orthonormality parabolic " + base, "orthonormality", 0.0, identity_defect(gram),
                       tol.quadrature, CompareKind::absolute);
                rb.add("interbasis unitarity " + base, "interbasis", 0.0, ib.unitarity_defect, tol.quadrature,
                       CompareKind::absolute);
            });
        }
    }

    // Extra integral and closed-form identities on every parabolic state.
    for (HalfInt n : levels) {
        for (const ParabolicState& p : enumerate_parabolic(params, n)) {
            const std::string base = label("n1", p.n1) + " " + label("n2", p.n2) + " " + label("m", p.m);
            rb.guarded("x_eigenvalue " + base, "x_operator", [&] {
                rb.add("x_eigenvalue " + base, "x_operator", beta_eigenvalue(params, p),
                       x_rayleigh_beta(params, p, settings.x_nodes), tol.x, CompareKind::absolute);
            });
            rb.guarded("identity " + base, "identity", [&] {
                const Energy en = parabolic_energy(params, p);
                const auto labels = parabolic_labels_from_beta(params, p.m, beta_eigenvalue(params, p), en.epsilon);
                rb.add("identity n1_from_beta " + base, "identity", p.n1, labels[0], tol.identity, CompareKind::absolute);
                rb.add("identity n2_from_beta " + base, "identity", p.n2, labels[1], tol.identity, CompareKind::absolute);
                rb.add("identity energy_match " + base, "identity", energy(params, p.m, n).value, en.value,
                       tol.identity, CompareKind::relative);
            });
        }
    }

    // Residuals of the closed forms under their reduced operators.
    auto residual_checks = [&](ResidualKind kind, const BasisState& state, const std::string& base) {
        const std::string name = std::string("residual ") + std::string(to_string(kind)) + " " + base;
        rb.guarded(name, "residual", [&] {
            rb.add(name, "residual", 0.0, closed_form_residual(params, kind, state, settings.residual_nodes), tol.fd,
                   CompareKind::absolute);
            const ResidualResult res = residual_convergence(params, kind, state, settings.convergence_nodes);
            // Residuals already at rounding level carry no convergence information.
            if (res.coarse > 1e-10) {
                rb.add("convergence " + std::string(to_string(kind)) + " " + base, "residual", 2.0, res.slope, tol.slope,
                       CompareKind::absolute);
            }
        });
    };
    for (HalfInt n : levels) {
        for (const SphericalState& s : enumerate_spherical(params, n)) {
            const std::string base = label("n", s.n) + " " + label("j", s.j) + " " + label("m", s.m);
            residual_checks(ResidualKind::radial, s, base);
            if (s.n == s.j + one) residual_checks(ResidualKind::angular, s, label("j", s.j) + " " + label("m", s.m));
        }
        for (const ParabolicState& p : enumerate_parabolic(params, n)) {
            const std::string base = label("n1", p.n1) + " " + label("n2", p.n2) + " " + label("m", p.m);
            residual_checks(ResidualKind::parabolic_xi, p, base);
            residual_checks(ResidualKind::parabolic_eta, p, base);
        }
    }

    // Textbook limits.
    if (params.c1 == 0.0 && params.c2 == 0.0) {
        for (HalfInt n : levels) {
            const double nv = n.value();
            for (HalfInt m : allowed_m(params, n)) {
                rb.add("coulomb_limit " + label("n", n) + " " + label("m", m), "identity", -0.5 / (nv * nv),
                       energy(params, m, n).value, tol.identity, CompareKind::relative);
            }
        }
    }
    return report;
}

}  // namespace ringkepler
