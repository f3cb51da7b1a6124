#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "ringkepler/grid.hpp"
#include "ringkepler/model.hpp"

namespace ringkepler {

/// Lowest eigenvalues of a discretized Sturm-Liouville problem, ascending.
struct EigenResult {
    std::vector<double> eigenvalues;
    Grid1D grid;
    std::string method;
};

/// Lowest k eigenvalues of the pencil K x = lambda M x with K symmetric
/// tridiagonal (diag, off) and M diagonal positive, by bisection on the
/// inertia of K - lambda M.
std::vector<double> pencil_lowest(const std::vector<double>& diag, const std::vector<double>& off,
                                  const std::vector<double>& mass, int k);

/// -(1/2) u'' + [A/(2 r^2) - 1/r] u = E u, u = r R, with u = 0 at both ends of
/// the grid. Grid ends are boundary nodes; the first may be r = 0.
EigenResult fd_radial_spectrum(double A, const Grid1D& grid, int k);

/// Same with A taken from the separation constant of (j, m) and a default
/// origin-anchored log grid whose outer edge covers the decay of the k-th state.
EigenResult fd_radial_spectrum(const ModelParams& params, HalfInt j, HalfInt m, int k, std::size_t nodes = 20000);
Grid1D default_radial_grid(double A, int k, std::size_t nodes);

/// Finite-volume discretization of the angular equation on the cell centers
/// of a uniform theta grid; fluxes through the poles vanish with sin(theta).
EigenResult fd_angular_spectrum(const ModelParams& params, HalfInt m, int k, std::size_t cells = 40000);

using BasisState = std::variant<SphericalState, ParabolicState>;

struct QuadratureSettings {
    int radial_nodes = 64;
    int angular_nodes = 256;
    int parabolic_nodes = 48;
};

/// <a|b> for two states of the same model, by product Gauss rules in the
/// natural coordinates (spherical when both are spherical, parabolic else).
std::complex<double> quad_overlap(const ModelParams& params, const BasisState& a, const BasisState& b,
                                  const QuadratureSettings& q = {});
Eigen::MatrixXcd quad_overlap(const ModelParams& params, const std::vector<BasisState>& as,
                              const std::vector<BasisState>& bs, const QuadratureSettings& q = {});

/// max |G - I| over a square Gram matrix.
double identity_defect(const Eigen::MatrixXcd& gram);

struct InterbasisResult {
    std::vector<ParabolicState> parabolic;
    std::vector<SphericalState> spherical;
    Eigen::MatrixXcd matrix;  ///< matrix(a, b) = <parabolic_a | spherical_b>
    double unitarity_defect = 0.0;
};

/// Overlaps between the parabolic and spherical states of level (n, m).
InterbasisResult interbasis_matrix(const ModelParams& params, HalfInt n, HalfInt m, const QuadratureSettings& q = {});

/// Residual of a closed-form function under its reduced operator.
/// rel = max |rho (L f - lambda f)| / max rho (|derivative| + |potential| + |lambda f|)
/// over interior nodes, with rho = r^{5/2}, sin^2(theta), xi or eta.
enum class ResidualKind { radial, angular, parabolic_xi, parabolic_eta };
std::string_view to_string(ResidualKind k);

struct ResidualResult {
    double coarse = 0.0;  ///< residual at the requested node count
    double fine = 0.0;    ///< residual at twice that count
    double slope = 0.0;   ///< log2(coarse / fine)
};

/// For radial and angular kinds the state is spherical; for the parabolic kinds
/// it is parabolic.
double closed_form_residual(const ModelParams& params, ResidualKind kind, const BasisState& state, std::size_t nodes);
ResidualResult residual_convergence(const ModelParams& params, ResidualKind kind, const BasisState& state,
                                    std::size_t nodes);

/// Rayleigh quotient of the discretized extra integral on the closed-form
/// parabolic state over the product grid x grid, weighted by (xi+eta)/4.
double x_rayleigh_quotient(const ModelParams& params, const ParabolicState& state, const Grid1D& grid);

/// Log grid on [1e-4, 70] / epsilon.
Grid1D default_x_grid(double epsilon, std::size_t nodes);

/// Richardson combination (4 q(h/2) - q(h)) / 3 of the Rayleigh quotients on
/// default_x_grid with nodes and 2 nodes - 1 points per axis.
double x_rayleigh_beta(const ModelParams& params, const ParabolicState& state, std::size_t nodes = 400);

struct Tolerances {
    double identity = 1e-10;
    double quadrature = 1e-8;
    double fd = 1e-6;
    double x = 1e-5;
    double slope = 0.2;  ///< allowed distance of the measured convergence order from 2
};

enum class CompareKind { absolute, relative, exact };
std::string_view to_string(CompareKind k);

struct CheckRecord {
    std::string name;
    std::string category;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    CompareKind compare = CompareKind::absolute;
    bool passed = false;
};

struct VerificationReport {
    ModelParams params;
    HalfInt n_max;
    Tolerances tolerances;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
    std::size_t failed_count() const;
};

struct VerificationSettings {
    std::size_t radial_nodes = 20000;
    std::size_t angular_cells = 40000;
    std::size_t residual_nodes = 32000;
    std::size_t convergence_nodes = 4000;  ///< slope measured between this count and twice it
    std::size_t x_nodes = 400;
    QuadratureSettings quadrature;
};

/// Runs every check for levels n <= n_max. Failures are recorded, never thrown;
/// invalid parameters still throw.
VerificationReport run_verification(const ModelParams& params, HalfInt n_max, const Tolerances& tol = {},
                                    const VerificationSettings& settings = {});

}  // namespace ringkepler
