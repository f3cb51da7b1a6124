#include "ringkepler/model.hpp"

#include <cmath>
#include <string>

#include "ringkepler/error.hpp"

namespace ringkepler {

namespace {

// sqrt(k^2 + 4c) - k without cancellation for small c.
double anomalous_shift(double k, double c) {
    if (c == 0.0) return 0.0;
    return 4.0 * c / (std::sqrt(k * k + 4.0 * c) + k);
}

void require_same_parity(const ModelParams& p, HalfInt label, const char* name) {
    if (!label.same_parity(p.s)) {
        throw ParityError(std::string(name) + " = " + label.str() + " and s = " + p.s.str() +
                          " must differ by an integer");
    }
}

}  // namespace

ModelParams validate_params(HalfInt s, double c1, double c2) {
    if (!std::isfinite(c1) || c1 < 0.0) throw DomainError("c1 must be a finite nonnegative number");
    if (!std::isfinite(c2) || c2 < 0.0) throw DomainError("c2 must be a finite nonnegative number");
    return ModelParams{s, c1, c2};
}

Exponents derived_exponents(const ModelParams& params, HalfInt m) {
    require_same_parity(params, m, "m");
    const HalfInt diff = (m - params.s).abs();  // |m - s|
    const HalfInt sum = (m + params.s).abs();   // |m + s|
    Exponents e;
    e.delta1 = anomalous_shift(diff.value(), params.c1);
    e.delta2 = anomalous_shift(sum.value(), params.c2);
    e.m1 = std::sqrt(diff.value() * diff.value() + 4.0 * params.c1);
    e.m2 = std::sqrt(sum.value() * sum.value() + 4.0 * params.c2);
    e.m_plus = HalfInt::from_twice((sum.twice() + diff.twice()) / 2);
    e.m_minus = HalfInt::from_twice((sum.twice() - diff.twice()) / 2);
    return e;
}

void check_state(const ModelParams& params, const SphericalState& st) {
    require_same_parity(params, st.m, "m");
    require_same_parity(params, st.j, "j");
    require_same_parity(params, st.n, "n");
    const Exponents e = derived_exponents(params, st.m);
    if (st.j < e.m_plus) {
        throw RangeError("j = " + st.j.str() + " is below m_plus = " + e.m_plus.str());
    }
    if (st.n < st.j + HalfInt::from_int(1)) {
        throw RangeError("n = " + st.n.str() + " must be at least j + 1 = " +
                         (st.j + HalfInt::from_int(1)).str());
    }
}

void check_state(const ModelParams& params, const ParabolicState& st) {
    require_same_parity(params, st.m, "m");
    if (st.n1 < 0 || st.n2 < 0) throw RangeError("parabolic quantum numbers must be nonnegative");
}

HalfInt principal_number(const ModelParams& params, const ParabolicState& st) {
    check_state(params, st);
    const Exponents e = derived_exponents(params, st.m);
    return HalfInt::from_int(st.n1 + st.n2 + 1) + e.m_plus;
}

Energy energy(const ModelParams& params, HalfInt m, HalfInt n, double effective_n_cap) {
    require_same_parity(params, n, "n");
    const Exponents e = derived_exponents(params, m);
    if (n < e.m_plus + HalfInt::from_int(1)) {
        throw RangeError("n = " + n.str() + " must be at least m_plus + 1 = " +
                         (e.m_plus + HalfInt::from_int(1)).str() + " for m = " + m.str());
    }
    const double n_eff = n.value() + e.delta_mean();
    if (n_eff > effective_n_cap) {
        throw RangeError("effective principal number " + std::to_string(n_eff) + " exceeds cap " +
                         std::to_string(effective_n_cap));
    }
    Energy out;
    out.epsilon = 1.0 / n_eff;
    out.value = -0.5 * out.epsilon * out.epsilon;
    return out;
}

std::vector<HalfInt> allowed_m(const ModelParams& params, HalfInt n) {
    require_same_parity(params, n, "n");
    if (n < params.s.abs() + HalfInt::from_int(1)) {
        throw RangeError("n = " + n.str() + " must be at least |s| + 1 = " +
                         (params.s.abs() + HalfInt::from_int(1)).str());
    }
    // m_plus = max(|m|, |s|) <= n - 1.
    const HalfInt top = n - HalfInt::from_int(1);
    std::vector<HalfInt> ms;
    for (int t = -top.twice(); t <= top.twice(); t += 2) ms.push_back(HalfInt::from_twice(t));
    return ms;
}

std::vector<SphericalState> enumerate_spherical(const ModelParams& params, HalfInt n) {
    std::vector<SphericalState> out;
    const HalfInt top = n - HalfInt::from_int(1);
    for (HalfInt m : allowed_m(params, n)) {
        const Exponents e = derived_exponents(params, m);
        for (HalfInt j = e.m_plus; j <= top; j = j + HalfInt::from_int(1)) out.push_back({n, j, m});
    }
    return out;
}

std::vector<ParabolicState> enumerate_parabolic(const ModelParams& params, HalfInt n) {
    std::vector<ParabolicState> out;
    for (HalfInt m : allowed_m(params, n)) {
        const Exponents e = derived_exponents(params, m);
        const HalfInt rest = n - e.m_plus - HalfInt::from_int(1);  // n1 + n2, an integer
        const int total = rest.twice() / 2;
        for (int n1 = 0; n1 <= total; ++n1) out.push_back({n1, total - n1, m});
    }
    return out;
}

}  // namespace ringkepler
