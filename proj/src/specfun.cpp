#include "ringkepler/specfun.hpp"

#include <cmath>
#include <string>

#include "ringkepler/error.hpp"

namespace ringkepler::specfun {

namespace {

void require_degree(int n, const char* fn) {
    if (n < 0) throw DomainError(std::string(fn) + ": degree must be nonnegative");
}

void require_unit_interval(double x, const char* fn) {
    if (!(std::abs(x) <= 1.0)) throw DomainError(std::string(fn) + ": |x| must be <= 1");
}

}  // namespace

double jacobi_p(int n, double a, double b, double x) {
    require_degree(n, "jacobi_p");
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("jacobi_p: a and b must exceed -1");
    require_unit_interval(x, "jacobi_p");

    if (n == 0) return 1.0;
    double p_prev = 1.0;
    double p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    const double ab2 = a * a - b * b;
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double denom = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c1 = (s - 1.0) * (s * (s - 2.0) * x + ab2);
        const double c0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double next = (c1 * p + c0 * p_prev) / denom;
        p_prev = p;
        p = next;
    }
    return p;
}

double gegenbauer_c(int n, double lambda, double x) {
    require_degree(n, "gegenbauer_c");
    if (!(lambda > -0.5)) throw DomainError("gegenbauer_c: lambda must exceed -1/2");
    require_unit_interval(x, "gegenbauer_c");

    if (n == 0) return 1.0;
    double c_prev = 1.0;
    double c = 2.0 * lambda * x;
    for (int k = 2; k <= n; ++k) {
        const double next = (2.0 * x * (k + lambda - 1.0) * c - (k + 2.0 * lambda - 2.0) * c_prev) / k;
        c_prev = c;
        c = next;
    }
    return c;
}

double assoc_legendre_p(int l, int m_abs, double x) {
    require_degree(l, "assoc_legendre_p");
    if (m_abs < 0 || m_abs > l) throw DomainError("assoc_legendre_p: need 0 <= m <= l");
    require_unit_interval(x, "assoc_legendre_p");

    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then upward in l.
    const double root = std::sqrt((1.0 - x) * (1.0 + x));
    double pmm = 1.0;
    double odd = 1.0;
    for (int i = 1; i <= m_abs; ++i) {
        pmm *= -odd * root;
        odd += 2.0;
    }
    if (l == m_abs) return pmm;
    double pm1 = x * (2.0 * m_abs + 1.0) * pmm;
    for (int k = m_abs + 2; k <= l; ++k) {
        const double next = ((2.0 * k - 1.0) * x * pm1 - (k + m_abs - 1.0) * pmm) / (k - m_abs);
        pmm = pm1;
        pm1 = next;
    }
    return pm1;
}

double kummer_m_terminating(int first, double b, double x) {
    if (first > 0) throw DomainError("kummer_m_terminating: first argument must be a nonpositive integer");
    if (!(b > 0.0)) throw DomainError("kummer_m_terminating: b must be positive");
    if (!(x >= 0.0)) throw DomainError("kummer_m_terminating: x must be nonnegative");

    const int n = -first;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (first + k) / (b + k) * x / (k + 1);
        sum += term;
    }
    return sum;
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: x must be positive");
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double pochhammer(double a, int n) {
    if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

double ln_factorial(int k) {
    if (k < 0) throw DomainError("ln_factorial: k must be nonnegative");
    return ln_gamma(k + 1.0);
}

}  // namespace ringkepler::specfun
