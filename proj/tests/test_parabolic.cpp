#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ringkepler/error.hpp"
#include "ringkepler/parabolic.hpp"
#include "ringkepler/quadrature.hpp"
#include "ringkepler/spherical.hpp"

using namespace ringkepler;
using doctest::Approx;
using std::numbers::pi;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

const ModelParams kHydrogen{h(0), 0.0, 0.0};

// <a|b> with dV = (xi+eta)/4 dxi deta dphi; both states share m.
double parabolic_overlap(const ModelParams& p, const ParabolicState& a, const ParabolicState& b) {
    auto ex = derived_exponents(p, a.m);
    double ea = parabolic_energy(p, a).epsilon, eb = parabolic_energy(p, b).epsilon;
    double lam = 0.5 * (ea + eb);
    auto rx = gauss_laguerre(48, ex.m1);
    auto ry = gauss_laguerre(48, ex.m2);
    double sum = 0.0;
    for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
        double xi = rx.nodes[i] / lam;
        double wx = rx.weights[i] * std::exp(rx.nodes[i] - ex.m1 * std::log(rx.nodes[i])) / lam;
        for (std::size_t k = 0; k < ry.nodes.size(); ++k) {
            double eta = ry.nodes[k] / lam;
            double wy = ry.weights[k] * std::exp(ry.nodes[k] - ex.m2 * std::log(ry.nodes[k])) / lam;
            auto va = parabolic_state_eval(p, a, {xi, eta, 0.0});
            auto vb = parabolic_state_eval(p, b, {xi, eta, 0.0});
            sum += wx * wy * (xi + eta) / 4 * (std::conj(va) * vb).real();
        }
    }
    return 2 * pi * sum;
}

}  // namespace

TEST_CASE("coordinate maps") {
    auto a = to_parabolic(1, 0, 0);
    CHECK(a.xi == Approx(1.0));
    CHECK(a.eta == Approx(1.0));
    CHECK(a.phi == 0.0);
    auto b = to_parabolic(0, 1, 0);
    CHECK(b.phi == Approx(pi / 2));
    auto c = to_parabolic(3, 4, 0);
    CHECK(c.xi == Approx(5.0));
    CHECK(c.eta == Approx(5.0));
    CHECK(c.phi == Approx(std::atan2(4.0, 3.0)));
    CHECK(to_parabolic(1, -1e-3, 0).phi == Approx(2 * pi - 1e-3));
    CHECK_THROWS_AS(to_parabolic(0, 0, 2), DomainError);

    auto x = from_parabolic({1, 1, 0});
    CHECK(x[0] == Approx(1.0));
    CHECK(x[1] == Approx(0.0));
    CHECK(x[2] == Approx(0.0));
    auto y = from_parabolic({4, 1, pi});
    CHECK(y[0] == Approx(-2.0));
    CHECK(std::abs(y[1]) < 1e-15);
    CHECK(y[2] == Approx(1.5));

    for (auto [px, py, pz] : {std::array{0.3, -2.0, 5.0}, std::array{-1e-4, 3e-4, -40.0}, std::array{7.0, 0.1, -0.2}}) {
        auto back = from_parabolic(to_parabolic(px, py, pz));
        CHECK(back[0] == Approx(px).epsilon(1e-12));
        CHECK(back[1] == Approx(py).epsilon(1e-12));
        CHECK(back[2] == Approx(pz).epsilon(1e-12));
    }
}

TEST_CASE("phi_factor values") {
    CHECK(phi_factor(0, 0.0, 1.0, 0.0) == 1.0);
    for (double m : {0.5, 1.0, 2.7}) {
        double eps = 0.8, x = 1.9;
        double ref = std::exp(-eps * x / 2) * std::pow(eps * x, m / 2) * std::sqrt(std::tgamma(m + 1)) / std::tgamma(m + 1);
        CHECK(phi_factor(0, m, eps, x) == Approx(ref).epsilon(1e-14));
    }
    CHECK(phi_factor(2, 1.5, 0.4, 3.0) == Approx(0.23352057543677294).epsilon(1e-14));
    CHECK_THROWS_AS(phi_factor(1, 1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(phi_factor(1, 1.0, 1.0, -1.0), DomainError);
}

TEST_CASE("beta examples") {
    CHECK(beta_eigenvalue({h(0), 0.8, 0.8}, {1, 1, h(0)}) == 0.0);
    CHECK(beta_eigenvalue(kHydrogen, {1, 0, h(0)}) == Approx(0.5));
    CHECK(beta_eigenvalue(kHydrogen, {0, 1, h(0)}) == Approx(-0.5));
    CHECK(beta_eigenvalue({h(1), 0, 0}, {0, 0, h(1)}) == Approx(-1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("labels round-trip through beta") {
    for (ModelParams p : {ModelParams{h(0), 0.3, 0.7}, ModelParams{h(1), 2.0, 0.5}, ModelParams{h(2), 1.0, 1.0},
                          ModelParams{h(-3), 0.0, 4.0}}) {
        for (HalfInt n = p.s.abs() + h(2); n <= p.s.abs() + h(12); n = n + h(2)) {
            for (auto& st : enumerate_parabolic(p, n)) {
                auto e = parabolic_energy(p, st);
                auto ex = derived_exponents(p, st.m);
                CHECK(e.value == Approx(energy(p, st.m, n).value).epsilon(1e-14));
                double eps_labels = 1.0 / (st.n1 + st.n2 + 0.5 * (ex.m1 + ex.m2) + 1.0);
                CHECK(e.epsilon == Approx(eps_labels).epsilon(1e-14));
                auto labels = parabolic_labels_from_beta(p, st.m, beta_eigenvalue(p, st), e.epsilon);
                CHECK(std::abs(labels[0] - st.n1) <= 1e-12 * std::max(1, st.n1 + 1));
                CHECK(std::abs(labels[1] - st.n2) <= 1e-12 * std::max(1, st.n2 + 1));
                CHECK(st.n1 + st.n2 + ex.m_plus.twice() / 2.0 + 1.0 == n.value());
            }
        }
    }
}

TEST_CASE("hydrogen ground state agrees with the spherical form") {
    ParabolicState g{0, 0, h(0)};
    for (auto [x, y, z] : {std::array{1.0, 0.0, 0.0}, std::array{0.01, 0.02, 0.0}, std::array{0.4, -1.2, 2.5}}) {
        auto pp = to_parabolic(x, y, z);
        double r = std::sqrt(x * x + y * y + z * z);
        auto v = parabolic_state_eval(kHydrogen, g, pp);
        CHECK(v.real() == Approx(std::exp(-r) / std::sqrt(pi)).epsilon(1e-14));
        CHECK(v.imag() == 0.0);
        auto s = spherical_state_eval(kHydrogen, {h(2), h(0), h(0)}, {r, std::acos(z / r), pp.phi});
        CHECK(std::abs(v - s) <= 1e-14);
    }
}

TEST_CASE("parabolic states are normalized and orthogonal") {
    for (ModelParams p : {kHydrogen, ModelParams{h(1), 0.3, 0.7}, ModelParams{h(2), 2.0, 0.5}}) {
        for (HalfInt n = p.s.abs() + h(2); n <= p.s.abs() + h(8); n = n + h(2)) {
            auto st = enumerate_parabolic(p, n);
            for (std::size_t a = 0; a < st.size(); ++a) {
                for (std::size_t b = a; b < st.size(); ++b) {
                    if (st[a].m != st[b].m) continue;
                    double ov = parabolic_overlap(p, st[a], st[b]);
                    CHECK(std::abs(ov - (a == b ? 1.0 : 0.0)) <= 1e-8);
                }
            }
        }
    }
}

TEST_CASE("modulus does not depend on the azimuth") {
    ModelParams p{h(1), 0.3, 0.7};
    ParabolicState st{1, 2, h(3)};
    auto a = parabolic_state_eval(p, st, {1.3, 0.6, 0.0});
    auto b = parabolic_state_eval(p, st, {1.3, 0.6, 2.2});
    CHECK(std::abs(a) == Approx(std::abs(b)).epsilon(1e-15));
    CHECK(std::arg(b / a) == Approx(1.0 * 2.2).epsilon(1e-13));  // m - s = 1
}
