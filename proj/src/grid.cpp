#include "ringkepler/grid.hpp"

#include <cmath>
#include <numbers>

#include "ringkepler/error.hpp"
#include "ringkepler/quadrature.hpp"

namespace ringkepler {

std::string_view to_string(Spacing s) {
    switch (s) {
        case Spacing::uniform: return "uniform";
        case Spacing::log_uniform: return "log_uniform";
        case Spacing::origin_log: return "origin_log";
        case Spacing::log_tan: return "log_tan";
        case Spacing::gauss_nodes: return "gauss_nodes";
        case Spacing::custom: return "custom";
    }
    return "custom";
}

Grid1D::Grid1D(std::vector<double> nodes, Spacing spacing) : nodes_(std::move(nodes)), spacing_(spacing) {
    if (nodes_.size() < 3) throw DomainError("Grid1D: at least 3 nodes are required");
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (!(nodes_[i] > nodes_[i - 1])) throw DomainError("Grid1D: nodes must be strictly increasing");
    }
}

Grid1D Grid1D::uniform(double lo, double hi, std::size_t count) {
    if (count < 3) throw DomainError("Grid1D: at least 3 nodes are required");
    std::vector<double> v(count);
    const double h = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) v[i] = lo + h * static_cast<double>(i);
    v.back() = hi;
    return Grid1D(std::move(v), Spacing::uniform);
}

Grid1D Grid1D::log_uniform(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0)) throw DomainError("Grid1D::log_uniform: lower end must be positive");
    Grid1D u = uniform(std::log(lo), std::log(hi), count);
    std::vector<double> v(u.nodes());
    for (double& x : v) x = std::exp(x);
    v.front() = lo;
    v.back() = hi;
    return Grid1D(std::move(v), Spacing::log_uniform);
}

Grid1D Grid1D::origin_log(double lo, double hi, std::size_t count) {
    if (count < 4) throw DomainError("Grid1D::origin_log: at least 4 nodes are required");
    Grid1D tail = log_uniform(lo, hi, count - 1);
    std::vector<double> v;
    v.reserve(count);
    v.push_back(0.0);
    v.insert(v.end(), tail.nodes().begin(), tail.nodes().end());
    return Grid1D(std::move(v), Spacing::origin_log);
}

Grid1D Grid1D::log_tan(double t_lo, double t_hi, std::size_t count) {
    Grid1D u = uniform(t_lo, t_hi, count);
    std::vector<double> v(u.nodes());
    for (double& t : v) t = 2.0 * std::atan(std::exp(t));
    return Grid1D(std::move(v), Spacing::log_tan);
}

Grid1D Grid1D::gauss_theta(std::size_t count) {
    const QuadratureRule rule = gauss_legendre(static_cast<int>(count));
    std::vector<double> v;
    v.reserve(count);
    for (auto it = rule.nodes.rbegin(); it != rule.nodes.rend(); ++it) v.push_back(std::acos(*it));
    return Grid1D(std::move(v), Spacing::gauss_nodes);
}

Grid1D Grid1D::theta_cells(std::size_t count) {
    if (count < 3) throw DomainError("Grid1D: at least 3 nodes are required");
    std::vector<double> v(count);
    const double h = std::numbers::pi / static_cast<double>(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = (static_cast<double>(i) + 0.5) * h;
    return Grid1D(std::move(v), Spacing::uniform);
}

SampledFunction::SampledFunction(Grid1D g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.size()) throw DomainError("SampledFunction: one value per node is required");
}

SampledFunction2D::SampledFunction2D(Grid1D x, Grid1D y, std::vector<double> v)
    : xi(std::move(x)), eta(std::move(y)), values(std::move(v)) {
    if (values.size() != xi.size() * eta.size()) {
        throw DomainError("SampledFunction2D: one value per product-grid node is required");
    }
}

Stencil central_stencil(const Grid1D& g, std::size_t i) {
    const double hm = g[i] - g[i - 1];
    const double hp = g[i + 1] - g[i];
    const double sum = hm + hp;
    Stencil s{};
    s.d1[0] = -hp / (hm * sum);
    s.d1[1] = (hp - hm) / (hm * hp);
    s.d1[2] = hm / (hp * sum);
    s.d2[0] = 2.0 / (hm * sum);
    s.d2[1] = -2.0 / (hm * hp);
    s.d2[2] = 2.0 / (hp * sum);
    return s;
}

}  // namespace ringkepler
