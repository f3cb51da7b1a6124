#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace ringkepler {

enum class Spacing {
    uniform,       ///< equal steps in the coordinate itself
    log_uniform,   ///< equal steps in log(coordinate)
    origin_log,    ///< node 0 at the origin, then log_uniform
    log_tan,       ///< theta with equal steps in log tan(theta/2)
    gauss_nodes,   ///< theta = arccos of Gauss-Legendre nodes
    custom,
};

std::string_view to_string(Spacing s);

/// Strictly increasing nodes, at least three of them.
class Grid1D {
public:
    Grid1D(std::vector<double> nodes, Spacing spacing);

    static Grid1D uniform(double lo, double hi, std::size_t count);
    static Grid1D log_uniform(double lo, double hi, std::size_t count);
    /// {0} followed by count - 1 log-uniform nodes in [lo, hi].
    static Grid1D origin_log(double lo, double hi, std::size_t count);
    /// theta nodes equally spaced in t = log tan(theta/2) over [t_lo, t_hi].
    static Grid1D log_tan(double t_lo, double t_hi, std::size_t count);
    /// theta = arccos(x_k) for the count-point Gauss-Legendre rule, ascending.
    static Grid1D gauss_theta(std::size_t count);
    /// Cell centers (k + 1/2) pi / count, k = 0..count-1.
    static Grid1D theta_cells(std::size_t count);

    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    double operator[](std::size_t i) const { return nodes_[i]; }
    double front() const { return nodes_.front(); }
    double back() const { return nodes_.back(); }
    Spacing spacing() const { return spacing_; }

private:
    std::vector<double> nodes_;
    Spacing spacing_;
};

/// Values of a real function at every node of a grid.
struct SampledFunction {
    Grid1D grid;
    std::vector<double> values;

    SampledFunction(Grid1D g, std::vector<double> v);
    template <class F>
    static SampledFunction sample(const Grid1D& g, F&& f) {
        std::vector<double> v;
        v.reserve(g.size());
        for (double x : g.nodes()) v.push_back(f(x));
        return SampledFunction(g, std::move(v));
    }
};

/// Real function on a product grid; values[i * eta.size() + k] = f(xi_i, eta_k).
struct SampledFunction2D {
    Grid1D xi;
    Grid1D eta;
    std::vector<double> values;

    SampledFunction2D(Grid1D x, Grid1D y, std::vector<double> v);
    double at(std::size_t i, std::size_t k) const { return values[i * eta.size() + k]; }
};

/// Three-point central weights at interior node i of a possibly nonuniform
/// grid: f'(x_i) ~ d1[0] f_{i-1} + d1[1] f_i + d1[2] f_{i+1}, same for f''.
struct Stencil {
    double d1[3];
    double d2[3];
};
Stencil central_stencil(const Grid1D& g, std::size_t i);

}  // namespace ringkepler
