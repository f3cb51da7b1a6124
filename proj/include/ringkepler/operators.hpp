#pragma once

#include <array>
#include <vector>

#include "ringkepler/grid.hpp"
#include "ringkepler/model.hpp"

namespace ringkepler {

/// Reduced operators after azimuthal separation, discretized with central
/// three-point differences. Boundary nodes have no central stencil and hold
/// NaN in every output.

/// An operator applied to f, kept split into its differential part and its
/// multiplicative part so residuals can be scaled by term magnitude.
struct OperatorTerms {
    std::vector<double> derivative;
    std::vector<double> potential;

    std::vector<double> total() const;
};

/// -[(1/sin t)(sin t f')' - (m1^2/(4 cos^2(t/2)) + m2^2/(4 sin^2(t/2))) f].
/// Eigenvalue A on Z_jm.
OperatorTerms angular_terms(const ModelParams& params, HalfInt m, const SampledFunction& f);
SampledFunction apply_angular(const ModelParams& params, HalfInt m, const SampledFunction& f);

/// (1/r^2)(r^2 f')' - (A/r^2) f + (2/r) f. Eigenvalue -2E on R_nj.
OperatorTerms radial_terms(double A, const SampledFunction& f);
SampledFunction apply_radial(double A, const SampledFunction& f);

/// -2[(x f')' + (E x/2 - m1^2/(4x) + 1/2) f]. Eigenvalue +beta on Phi_{n1 m1}.
OperatorTerms parabolic_xi_terms(const ModelParams& params, HalfInt m, double E, const SampledFunction& f);
SampledFunction apply_parabolic_xi(const ModelParams& params, HalfInt m, double E, const SampledFunction& f);

/// -2[(x f')' + (E x/2 - m2^2/(4x) + 1/2) f]. Eigenvalue -beta on Phi_{n2 m2}.
OperatorTerms parabolic_eta_terms(const ModelParams& params, HalfInt m, double E, const SampledFunction& f);
SampledFunction apply_parabolic_eta(const ModelParams& params, HalfInt m, double E, const SampledFunction& f);

/// Reduced potential of the extra integral in parabolic form, with the
/// azimuthal derivative replaced by i m:
///   -[xi^2 (m+s)^2 - eta^2 (m-s)^2] / (2 xi eta (xi+eta))
///   + 2 c1 eta / (xi (xi+eta)) - 2 c2 xi / (eta (xi+eta)) + (xi-eta)/(xi+eta).
double x_reduced_potential(const ModelParams& params, HalfInt m, double xi, double eta);

/// Extra integral of motion on a product grid:
///   2/(xi+eta) [xi (eta f_eta)_eta - eta (xi f_xi)_xi] + potential * f.
/// Eigenvalue beta on psi_{n1 n2 m}. Values on the outer frame are NaN.
SampledFunction2D apply_x_reduced(const ModelParams& params, HalfInt m, const SampledFunction2D& f);

/// Compares the multiplicative terms of the Cartesian and parabolic forms of
/// the extra integral at each off-axis point (x, y, z), including the reduced
/// azimuthal part of each (the two forms differ by a gauge phase e^{-i s phi}).
/// Returns the largest absolute disagreement. Throws DomainError on the axis.
double x_cartesian_consistency(const ModelParams& params, HalfInt m,
                               const std::vector<std::array<double, 3>>& points);

}  // namespace ringkepler
