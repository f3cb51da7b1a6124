#include "ringkepler/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ringkepler/error.hpp"
#include "ringkepler/specfun.hpp"

namespace ringkepler {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mu0 times the squared first component of each normalized eigenvector.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw RangeError("quadrature: eigen solve did not converge");
    QuadratureRule rule;
    const auto n = diag.size();
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        rule.nodes[k] = solver.eigenvalues()[k];
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    QuadratureRule rule = golub_welsch(diag, off, 2.0);
    // Enforce exact antisymmetry of the nodes.
    for (int k = 0; k < n / 2; ++k) {
        const double x = 0.5 * (rule.nodes[n - 1 - k] - rule.nodes[k]);
        const double w = 0.5 * (rule.weights[n - 1 - k] + rule.weights[k]);
        rule.nodes[k] = -x;
        rule.nodes[n - 1 - k] = x;
        rule.weights[k] = rule.weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    rule.kind = QuadratureKind::gauss_legendre;
    return rule;
}

QuadratureRule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw DomainError("gauss_laguerre: n must be positive");
    if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k * (k + alpha));
    QuadratureRule rule = golub_welsch(diag, off, std::exp(specfun::ln_gamma(alpha + 1.0)));
    rule.kind = QuadratureKind::gauss_laguerre;
    rule.alpha = alpha;
    return rule;
}

}  // namespace ringkepler
