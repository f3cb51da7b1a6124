#include <algorithm>
#include <cmath>
#include <numbers>

#include "ringkepler/cli.hpp"
#include "ringkepler/parabolic.hpp"
#include "ringkepler/spherical.hpp"

namespace ringkepler::cli {

namespace {

Cell half(HalfInt h) { return h.str(); }

void add_params(Document& doc, const ModelParams& p) {
    doc.metadata.emplace_back("s", half(p.s));
    doc.metadata.emplace_back("c1", p.c1);
    doc.metadata.emplace_back("c2", p.c2);
}

std::vector<HalfInt> levels_up_to(const ModelParams& p, HalfInt n_max) {
    std::vector<HalfInt> out;
    for (HalfInt n = p.s.abs() + HalfInt::from_int(1); n <= n_max; n = n + HalfInt::from_int(1)) out.push_back(n);
    return out;
}

bool selected(const std::vector<HalfInt>& filter, HalfInt m) {
    return filter.empty() || std::find(filter.begin(), filter.end(), m) != filter.end();
}

}  // namespace

Document cmd_spectrum(const RunConfig& cfg) {
    const ModelParams& p = cfg.params;
    Document doc;
    doc.schema = "ringkepler.spectrum/1";
    doc.conventions = "E = -eps^2/2, eps = 1/(n + (delta1+delta2)/2); separation constant on spherical rows, beta on parabolic rows";
    add_params(doc, p);
    doc.metadata.emplace_back("n_max", half(*cfg.n_max));
    doc.columns = {"basis", "n", "m", "j", "n1", "n2", "delta1", "delta2", "energy", "epsilon", "separation", "beta"};
    for (HalfInt n : levels_up_to(p, *cfg.n_max)) {
        if (cfg.basis != Basis::parabolic) {
            for (const SphericalState& s : enumerate_spherical(p, n)) {
                if (!selected(cfg.m_filter, s.m)) continue;
                const Exponents e = derived_exponents(p, s.m);
                const Energy en = energy(p, s.m, s.n);
                doc.rows.push_back({std::string("spherical"), half(s.n), half(s.m), half(s.j), {}, {}, e.delta1, e.delta2,
                                    en.value, en.epsilon, separation_constant(p, s.j, s.m), {}});
            }
        }
        if (cfg.basis != Basis::spherical) {
            for (const ParabolicState& s : enumerate_parabolic(p, n)) {
                if (!selected(cfg.m_filter, s.m)) continue;
                const Exponents e = derived_exponents(p, s.m);
                const Energy en = parabolic_energy(p, s);
                doc.rows.push_back({std::string("parabolic"), half(n), half(s.m), {}, static_cast<long long>(s.n1),
                                    static_cast<long long>(s.n2), e.delta1, e.delta2, en.value, en.epsilon, {},
                                    beta_eigenvalue(p, s)});
            }
        }
    }
    return doc;
}

Document cmd_enumerate(const RunConfig& cfg) {
    const ModelParams& p = cfg.params;
    const HalfInt n = *cfg.n;
    Document doc;
    doc.schema = "ringkepler.enumerate/1";
    doc.conventions = "spherical rows ordered by (m, j), parabolic rows by (m, n1); n = n1 + n2 + m_plus + 1";
    add_params(doc, p);
    doc.metadata.emplace_back("n", half(n));
    doc.columns = {"basis", "n", "m", "j", "n1", "n2"};
    const auto sph = enumerate_spherical(p, n);
    const auto par = enumerate_parabolic(p, n);
    doc.metadata.emplace_back("spherical_count", static_cast<long long>(sph.size()));
    doc.metadata.emplace_back("parabolic_count", static_cast<long long>(par.size()));
    if (cfg.basis != Basis::parabolic) {
        for (const auto& s : sph) doc.rows.push_back({std::string("spherical"), half(n), half(s.m), half(s.j), {}, {}});
    }
    if (cfg.basis != Basis::spherical) {
        for (const auto& s : par) {
            doc.rows.push_back({std::string("parabolic"), half(n), half(s.m), {}, static_cast<long long>(s.n1),
                                static_cast<long long>(s.n2)});
        }
    }
    return doc;
}

Document cmd_eval(const RunConfig& cfg) {
    const ModelParams& p = cfg.params;
    Document doc;
    doc.schema = "ringkepler.eval/1";
    doc.conventions =
        "psi(r,theta,phi) with phase exp(i(m-s)phi); parabolic xi = r(1+cos theta), eta = r(1-cos theta); pole = 1 "
        "where theta is 0 or pi and the value is the limit along the meridian";
    add_params(doc, p);
    const bool spherical = cfg.basis == Basis::spherical;
    doc.metadata.emplace_back("basis", std::string(spherical ? "spherical" : "parabolic"));
    SphericalState sst;
    ParabolicState pst;
    Energy en;
    if (spherical) {
        sst = SphericalState{*cfg.n, *cfg.j, *cfg.m};
        en = energy(p, sst.m, sst.n);
        doc.metadata.emplace_back("n", half(sst.n));
        doc.metadata.emplace_back("j", half(sst.j));
    } else {
        pst = ParabolicState{*cfg.n1, *cfg.n2, *cfg.m};
        en = parabolic_energy(p, pst);
        doc.metadata.emplace_back("n", half(principal_number(p, pst)));
        doc.metadata.emplace_back("n1", static_cast<long long>(pst.n1));
        doc.metadata.emplace_back("n2", static_cast<long long>(pst.n2));
    }
    doc.metadata.emplace_back("m", half(*cfg.m));
    doc.metadata.emplace_back("energy", en.value);
    doc.columns = {"r", "theta", "phi", "re", "im", "abs2", "pole"};

    const int count = cfg.points;
    auto lerp = [count](double a, double b, int i) {
        if (count == 1 || i == 0) return a;
        if (i == count - 1) return b;
        return a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    };
    for (int i = 0; i < count; ++i) {
        const bool ray = cfg.grid == EvalGrid::ray;
        const double r = ray ? lerp(cfg.r_min, cfg.r_max, i) : cfg.r;
        const double theta = ray ? cfg.theta : lerp(cfg.theta_min, cfg.theta_max, i);
        const bool pole = theta == 0.0 || theta == std::numbers::pi;
        std::complex<double> psi;
        if (spherical) {
            psi = spherical_state_eval(p, sst, SphericalPoint{r, theta, cfg.phi});
        } else {
            const double c = std::cos(0.5 * theta);
            const double s = std::sin(0.5 * theta);
            psi = parabolic_state_eval(p, pst, ParabolicPoint{2.0 * r * c * c, pole && theta == 0.0 ? 0.0 : 2.0 * r * s * s, cfg.phi});
        }
        doc.rows.push_back({r, theta, cfg.phi, psi.real(), psi.imag(), std::norm(psi), static_cast<long long>(pole)});
    }
    return doc;
}

Document cmd_interbasis(const RunConfig& cfg) {
    const ModelParams& p = cfg.params;
    const InterbasisResult ib = interbasis_matrix(p, *cfg.n, *cfg.m);
    Document doc;
    doc.schema = "ringkepler.interbasis/1";
    doc.conventions = "entry (row, col) = <parabolic_row | spherical_col> at fixed (n, m); rows by n1, columns by j";
    add_params(doc, p);
    doc.metadata.emplace_back("n", half(*cfg.n));
    doc.metadata.emplace_back("m", half(*cfg.m));
    doc.metadata.emplace_back("dimension", static_cast<long long>(ib.parabolic.size()));
    doc.metadata.emplace_back("unitarity_defect", ib.unitarity_defect);
    doc.columns = {"row", "col", "n1", "n2", "j", "re", "im", "abs"};
    for (std::size_t a = 0; a < ib.parabolic.size(); ++a) {
        for (std::size_t b = 0; b < ib.spherical.size(); ++b) {
            const std::complex<double> u = ib.matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            doc.rows.push_back({static_cast<long long>(a), static_cast<long long>(b),
                                static_cast<long long>(ib.parabolic[a].n1), static_cast<long long>(ib.parabolic[a].n2),
                                half(ib.spherical[b].j), u.real(), u.imag(), std::abs(u)});
        }
    }
    return doc;
}

Document cmd_verify(const RunConfig& cfg, bool& passed) {
    const VerificationReport report = run_verification(cfg.params, *cfg.n_max, cfg.tolerances);
    passed = report.all_passed();
    Document doc;
    doc.schema = "ringkepler.verification_report/1";
    doc.conventions = "absolute: |closed_form - oracle| <= tolerance; relative: divided by |closed_form|; exact: equal";
    add_params(doc, cfg.params);
    doc.metadata.emplace_back("n_max", half(*cfg.n_max));
    doc.metadata.emplace_back("tol_identity", cfg.tolerances.identity);
    doc.metadata.emplace_back("tol_quadrature", cfg.tolerances.quadrature);
    doc.metadata.emplace_back("tol_fd", cfg.tolerances.fd);
    doc.metadata.emplace_back("tol_x", cfg.tolerances.x);
    doc.metadata.emplace_back("tol_slope", cfg.tolerances.slope);
    doc.metadata.emplace_back("checks", static_cast<long long>(report.checks.size()));
    doc.metadata.emplace_back("failed", static_cast<long long>(report.failed_count()));
    doc.metadata.emplace_back("passed", passed);
    doc.columns = {"name", "category", "closed_form", "oracle", "abs_dev", "rel_dev", "tolerance", "compare", "passed"};
    for (const CheckRecord& c : report.checks) {
        doc.rows.push_back({c.name, c.category, c.closed_form, c.oracle, c.abs_dev, c.rel_dev, c.tolerance,
                            std::string(to_string(c.compare)), c.passed});
    }
    return doc;
}

}  // namespace ringkepler::cli
