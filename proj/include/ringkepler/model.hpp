#pragma once

#include <vector>

#include "ringkepler/half_integer.hpp"

namespace ringkepler {

/// Monopole charge s (any half-integer, Dirac quantization) and the two
/// ring-shape strengths c1, c2 >= 0 of the potential
///   1/(2r^2) s^2 - 1/r + c1/(r(r+z)) + c2/(r(r-z)).
struct ModelParams {
    HalfInt s;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Throws DomainError unless c1, c2 are finite and nonnegative.
ModelParams validate_params(HalfInt s, double c1, double c2);

/// Angular exponents for one (s, m) pair.
///   m1 = sqrt((m-s)^2 + 4 c1) = |m-s| + delta1
///   m2 = sqrt((m+s)^2 + 4 c2) = |m+s| + delta2
///   m_plus  = (|m+s| + |m-s|) / 2
///   m_minus = (|m+s| - |m-s|) / 2
struct Exponents {
    double m1 = 0.0;
    double m2 = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    HalfInt m_plus;
    HalfInt m_minus;

    double delta_mean() const { return 0.5 * (delta1 + delta2); }
};

/// Throws ParityError when m - s is not an integer.
Exponents derived_exponents(const ModelParams& params, HalfInt m);

/// Spherical labels (n, j, m).
struct SphericalState {
    HalfInt n;
    HalfInt j;
    HalfInt m;
    auto operator<=>(const SphericalState&) const = default;
};

/// Parabolic labels (n1, n2, m); n1, n2 are nonnegative integers.
struct ParabolicState {
    int n1 = 0;
    int n2 = 0;
    HalfInt m;
    auto operator<=>(const ParabolicState&) const = default;
};

/// E = -epsilon^2 / 2 with epsilon = 1 / (n + (delta1 + delta2)/2).
struct Energy {
    double value = 0.0;
    double epsilon = 0.0;
};

/// Default ceiling on the effective principal number n + (delta1 + delta2)/2.
inline constexpr double kDefaultEffectiveNCap = 120.0;

/// Throws ParityError / RangeError when the labels are inconsistent with s.
void check_state(const ModelParams& params, const SphericalState& state);
void check_state(const ModelParams& params, const ParabolicState& state);

/// Principal number implied by parabolic labels: n1 + n2 + m_plus + 1.
HalfInt principal_number(const ModelParams& params, const ParabolicState& state);

/// Energy of level (n, m). Requires n >= m_plus + 1 with n - m_plus integer.
/// The level is labeled by m as well because delta1, delta2 depend on it.
Energy energy(const ModelParams& params, HalfInt m, HalfInt n,
              double effective_n_cap = kDefaultEffectiveNCap);

/// All (n, j, m) at fixed n, ordered by (m, j).
std::vector<SphericalState> enumerate_spherical(const ModelParams& params, HalfInt n);

/// All (n1, n2, m) at fixed n, ordered by (m, n1).
std::vector<ParabolicState> enumerate_parabolic(const ModelParams& params, HalfInt n);

/// Allowed m values at fixed n, ascending.
std::vector<HalfInt> allowed_m(const ModelParams& params, HalfInt n);

}  // namespace ringkepler
