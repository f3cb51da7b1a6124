#pragma once

#include <array>
#include <complex>

#include "ringkepler/model.hpp"

namespace ringkepler {

/// xi = r + z, eta = r - z, phi the azimuth.
struct ParabolicPoint {
    double xi = 1.0;
    double eta = 1.0;
    double phi = 0.0;
};

/// Throws DomainError on the z axis (x = y = 0).
ParabolicPoint to_parabolic(double x, double y, double z);
std::array<double, 3> from_parabolic(const ParabolicPoint& p);

/// Phi_{n,m}(x) = 1/Gamma(m+1) sqrt(Gamma(n+m+1)/n!) e^{-eps x/2} (eps x)^{m/2} 1F1(-n; m+1; eps x).
/// Unit normalized in the variable eps * x.
double phi_factor(int n, double m, double epsilon, double x);

/// Eigenvalue of the extra integral of motion on psi_{n1 n2 m}:
///   beta = eps (n1 - n2 + (|m-s| - |m+s| + d1 - d2) / 2).
double beta_eigenvalue(const ModelParams& params, const ParabolicState& state);

/// Energy of a parabolic state (via n = n1 + n2 + m_plus + 1).
Energy parabolic_energy(const ModelParams& params, const ParabolicState& state);

/// Real-valued n1, n2 recovered from (beta, eps) by the separation relations
///   n1 = -(|m-s| + d1 + 1)/2 + (beta + 1)/(2 eps)
///   n2 = -(|m+s| + d2 + 1)/2 - (beta - 1)/(2 eps).
std::array<double, 2> parabolic_labels_from_beta(const ModelParams& params, HalfInt m, double beta,
                                                 double epsilon);

/// psi = sqrt(2) eps^2 Phi_{n1 m1}(xi) Phi_{n2 m2}(eta) e^{i(m-s)phi} / sqrt(2 pi).
/// Axis points (xi = 0 or eta = 0) return the limiting value.
std::complex<double> parabolic_state_eval(const ModelParams& params, const ParabolicState& state,
                                          const ParabolicPoint& p);

}  // namespace ringkepler
