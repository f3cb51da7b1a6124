#include <cmath>
#include <set>

#include "doctest.h"
#include "ringkepler/error.hpp"
#include "ringkepler/model.hpp"

using namespace ringkepler;
using doctest::Approx;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_CASE("half integers parse and print") {
    CHECK(HalfInt::parse("3/2").twice() == 3);
    CHECK(HalfInt::parse("-1/2").twice() == -1);
    CHECK(HalfInt::parse("2").twice() == 4);
    CHECK(HalfInt::parse("4/2").twice() == 4);
    CHECK(h(3).str() == "3/2");
    CHECK(h(-4).str() == "-2");
    CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse(""), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate_params(h(0), 0.0, 0.0));
    CHECK(validate_params(h(1), 0.5, 2.0).s.twice() == 1);
    CHECK_THROWS_AS(validate_params(h(2), -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(validate_params(h(0), 0.0, std::nan("")), DomainError);
    CHECK_THROWS_AS(validate_params(h(0), 0.0, INFINITY), DomainError);
}

TEST_CASE("derived exponents") {
    SUBCASE("hydrogen m = 1") {
        auto e = derived_exponents({h(0), 0.0, 0.0}, h(2));
        CHECK(e.m1 == 1.0);
        CHECK(e.m2 == 1.0);
        CHECK(e.delta1 == 0.0);
        CHECK(e.delta2 == 0.0);
        CHECK(e.m_plus == h(2));
        CHECK(e.m_minus == h(0));
    }
    SUBCASE("c1 only") {
        auto e = derived_exponents({h(0), 1.0, 0.0}, h(0));
        CHECK(e.m1 == Approx(2.0));
        CHECK(e.delta1 == Approx(2.0));
        CHECK(e.m2 == 0.0);
        CHECK(e.delta2 == 0.0);
    }
    SUBCASE("half-integer charge") {
        auto e = derived_exponents({h(1), 0.5, 0.5}, h(1));
        CHECK(e.m1 == Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(e.delta1 == Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(e.m2 == Approx(std::sqrt(3.0)).epsilon(1e-15));
        CHECK(e.delta2 == Approx(0.7320508075688773).epsilon(1e-15));
        CHECK(e.m_plus == h(1));
        CHECK(e.m_minus == h(1));
    }
    CHECK_THROWS_AS(derived_exponents({h(1), 0.0, 0.0}, h(0)), ParityError);
}

TEST_CASE("deltas grow with the ring strengths") {
    double prev1 = -1.0, prev2 = -1.0;
    for (double c : {0.0, 0.01, 0.3, 1.0, 4.0, 25.0}) {
        auto e = derived_exponents({h(2), c, c}, h(0));
        CHECK(e.delta1 > prev1);
        CHECK(e.delta2 > prev2);
        prev1 = e.delta1;
        prev2 = e.delta2;
    }
    CHECK(derived_exponents({h(3), 0.0, 0.7}, h(1)).delta1 == 0.0);
}

TEST_CASE("energy examples") {
    CHECK(energy({h(0), 0, 0}, h(0), h(2)).value == Approx(-0.5).epsilon(1e-15));
    CHECK(energy({h(1), 0, 0}, h(1), h(3)).value == Approx(-2.0 / 9.0).epsilon(1e-15));
    auto e = energy({h(0), 1.0, 1.0}, h(0), h(2));
    CHECK(e.value == Approx(-1.0 / 18.0).epsilon(1e-15));
    CHECK(e.epsilon == Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("energy rejects bad levels") {
    ModelParams p{h(2), 0.0, 0.0};
    CHECK_THROWS_AS(energy(p, h(0), h(2)), RangeError);   // n = 1 < m_plus + 1
    CHECK_THROWS_AS(energy(p, h(0), h(5)), ParityError);  // half-integer n with integer s
    CHECK_THROWS_AS(energy(p, h(1), h(4)), ParityError);
    CHECK_THROWS_AS(energy(p, h(0), h(400), 50.0), RangeError);
}

TEST_CASE("energy is increasing in n and tends to zero") {
    for (ModelParams p : {ModelParams{h(0), 0.3, 0.7}, ModelParams{h(1), 2.0, 0.5}, ModelParams{h(2), 1.0, 1.0}}) {
        for (int m2 = -4; m2 <= 4; ++m2) {
            HalfInt m = h(m2);
            if (!m.same_parity(p.s)) continue;
            auto ex = derived_exponents(p, m);
            double prev = -INFINITY;
            for (HalfInt n = ex.m_plus + h(2); n <= h(160); n = n + h(2)) {
                double e = energy(p, m, n).value;
                CHECK(e > prev);
                CHECK(e < 0.0);
                prev = e;
            }
            CHECK(prev > -1e-4);
        }
    }
}

TEST_CASE("coulomb degeneracy without ring terms") {
    for (int s2 : {0, 1, 2, 3}) {
        ModelParams p{h(s2), 0.0, 0.0};
        for (HalfInt n = h(s2).abs() + h(2); n <= h(s2) + h(12); n = n + h(2)) {
            for (HalfInt m : allowed_m(p, n)) {
                double nv = n.value();
                CHECK(energy(p, m, n).value == Approx(-0.5 / (nv * nv)).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("spherical enumeration") {
    SUBCASE("hydrogen n = 2") {
        auto st = enumerate_spherical({h(0), 0, 0}, h(4));
        REQUIRE(st.size() == 4);
        CHECK(st[0] == SphericalState{h(4), h(2), h(-2)});
        CHECK(st[1] == SphericalState{h(4), h(0), h(0)});
        CHECK(st[2] == SphericalState{h(4), h(2), h(0)});
        CHECK(st[3] == SphericalState{h(4), h(2), h(2)});
    }
    SUBCASE("s = 1/2, n = 3/2") {
        auto st = enumerate_spherical({h(1), 0, 0}, h(3));
        REQUIRE(st.size() == 2);
        CHECK(st[0] == SphericalState{h(3), h(1), h(-1)});
        CHECK(st[1] == SphericalState{h(3), h(1), h(1)});
    }
    SUBCASE("s = 1, n = 2") {
        auto st = enumerate_spherical({h(2), 0, 0}, h(4));
        REQUIRE(st.size() == 3);
        for (auto& x : st) CHECK(x.j == h(2));
    }
}

TEST_CASE("parabolic enumeration") {
    SUBCASE("hydrogen n = 2") {
        auto st = enumerate_parabolic({h(0), 0, 0}, h(4));
        REQUIRE(st.size() == 4);
        CHECK(st[0] == ParabolicState{0, 0, h(-2)});
        CHECK(st[1] == ParabolicState{0, 1, h(0)});
        CHECK(st[2] == ParabolicState{1, 0, h(0)});
        CHECK(st[3] == ParabolicState{0, 0, h(2)});
    }
    SUBCASE("s = 1/2, n = 3/2") {
        auto st = enumerate_parabolic({h(1), 0, 0}, h(3));
        REQUIRE(st.size() == 2);
        CHECK(st[0] == ParabolicState{0, 0, h(-1)});
        CHECK(st[1] == ParabolicState{0, 0, h(1)});
    }
}

TEST_CASE("enumerations agree and respect parity") {
    for (int s2 : {-3, -2, 0, 1, 2, 4}) {
        ModelParams p{h(s2), 0.4, 1.1};
        for (HalfInt n = h(s2).abs() + h(2); n <= h(s2).abs() + h(14); n = n + h(2)) {
            auto sph = enumerate_spherical(p, n);
            auto par = enumerate_parabolic(p, n);
            CHECK(sph.size() == par.size());
            std::size_t expected = 0;
            for (HalfInt m : allowed_m(p, n)) {
                auto ex = derived_exponents(p, m);
                expected += std::size_t((n - ex.m_plus).twice() / 2);
            }
            CHECK(sph.size() == expected);
            for (auto& st : sph) {
                CHECK(st.j.same_parity(p.s));
                CHECK(st.m.same_parity(p.s));
                CHECK(st.n.same_parity(p.s));
                CHECK_NOTHROW(check_state(p, st));
            }
            for (auto& st : par) {
                CHECK(principal_number(p, st) == n);
                CHECK_NOTHROW(check_state(p, st));
            }
            std::set<SphericalState> unique(sph.begin(), sph.end());
            CHECK(unique.size() == sph.size());
            CHECK(std::is_sorted(sph.begin(), sph.end(), [](auto& a, auto& b) {
                return std::pair{a.m, a.j} < std::pair{b.m, b.j};
            }));
        }
    }
}

TEST_CASE("state validation") {
    ModelParams p{h(1), 0, 0};
    CHECK_THROWS_AS(check_state(p, SphericalState{h(3), h(1), h(0)}), ParityError);
    CHECK_THROWS_AS(check_state(p, SphericalState{h(3), h(3), h(1)}), RangeError);
    CHECK_THROWS_AS(check_state(p, SphericalState{h(5), h(1), h(3)}), RangeError);
    CHECK_THROWS_AS(check_state(p, ParabolicState{-1, 0, h(1)}), RangeError);
}
