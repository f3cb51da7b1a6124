#pragma once

#include <complex>

#include "ringkepler/model.hpp"

namespace ringkepler {

/// (r, theta, phi) with r > 0 and theta in [0, pi]. The poles are accepted
/// and return the limiting value.
struct SphericalPoint {
    double r = 1.0;
    double theta = 0.5;
    double phi = 0.0;
};

/// Value of a ring-shaped monopole harmonic. at_pole is set when theta is
/// exactly 0 or pi; value then holds the limit along the meridian.
struct AngularValue {
    std::complex<double> value;
    bool at_pole = false;
};

/// A = (j + (delta1+delta2)/2)(j + (delta1+delta2)/2 + 1).
double separation_constant(const ModelParams& params, HalfInt j, HalfInt m);

/// Positive normalization of Z_jm such that the integral of |Z|^2 over the
/// unit sphere is one. Assembled in log space.
///
/// With the half-angle factors cos^{m1}(theta/2) sin^{m2}(theta/2) the
/// constant reads
///   N^2 = (2j+d1+d2+1) (j-m_+)! Gamma(j+m_++d1+d2+1)
///         / (4 pi Gamma(j-m_-+d1+1) Gamma(j+m_-+d2+1)).
double angular_norm(const ModelParams& params, HalfInt j, HalfInt m);
double ln_angular_norm(const ModelParams& params, HalfInt j, HalfInt m);

/// Z_jm(theta, phi) = N cos^{m1}(theta/2) sin^{m2}(theta/2)
///                    P_{j-m_+}^{(m2,m1)}(cos theta) exp(i(m-s)phi).
/// Throws DomainError for theta outside [0, pi].
AngularValue ring_harmonic(const ModelParams& params, HalfInt j, HalfInt m, double theta, double phi);

/// C_nj = 2 eps^2 / Gamma(2j+d1+d2+2) sqrt(Gamma(n+j+d1+d2+1) / (n-j-1)!).
double radial_norm(const ModelParams& params, HalfInt n, HalfInt j, HalfInt m);
double ln_radial_norm(const ModelParams& params, HalfInt n, HalfInt j, HalfInt m);

/// R_nj(r) = C (2 eps r)^{j+(d1+d2)/2} e^{-eps r} 1F1(-n+j+1; 2j+d1+d2+2; 2 eps r).
/// Throws DomainError for r <= 0.
double radial_wavefunction(const ModelParams& params, HalfInt n, HalfInt j, HalfInt m, double r);

/// psi = R_nj(r) Z_jm(theta, phi).
std::complex<double> spherical_state_eval(const ModelParams& params, const SphericalState& state,
                                          const SphericalPoint& point);

}  // namespace ringkepler
