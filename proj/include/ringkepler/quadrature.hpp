#pragma once

#include <string>
#include <vector>

namespace ringkepler {

enum class QuadratureKind { gauss_legendre, gauss_laguerre };

/// Nodes ascending, weights positive. For gauss_laguerre the weight
/// function x^alpha e^{-x} is built into the weights.
struct QuadratureRule {
    QuadratureKind kind = QuadratureKind::gauss_legendre;
    double alpha = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule on [-1, 1], exact for polynomials of degree 2n - 1.
QuadratureRule gauss_legendre(int n);

/// n-point rule for the integral over (0, inf) of x^alpha e^{-x} p(x), alpha > -1.
QuadratureRule gauss_laguerre(int n, double alpha);

}  // namespace ringkepler
