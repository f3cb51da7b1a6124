#pragma once

// Classical orthogonal polynomials and the few auxiliary functions the
// closed-form bound states are assembled from.
//
// Conventions:
//  * jacobi_p(n, a, b, x) is the standard P_n^{(a,b)}(x), P_n(1) = (a+1)_n / n!.
//  * gegenbauer_c(n, lambda, x) is C_n^lambda(x) with C_1 = 2 lambda x.
//  * assoc_legendre_p(l, m, x) carries the (-1)^m Condon-Shortley sign, i.e.
//      P_l^m(x) = (-2)^m Gamma(m + 1/2) / sqrt(pi) (1 - x^2)^{m/2} C_{l-m}^{m+1/2}(x),
//    so P_1^1(0) = -1.
//
// Every function is pure and reentrant.

namespace ringkepler::specfun {

double jacobi_p(int n, double a, double b, double x);
double gegenbauer_c(int n, double lambda, double x);
double assoc_legendre_p(int l, int m_abs, double x);

/// Terminating confluent hypergeometric 1F1(first; b; x) for first = -n, n >= 0.
/// Exactly n + 1 terms are summed.
double kummer_m_terminating(int first, double b, double x);

double ln_gamma(double x);
double pochhammer(double a, int n);

/// ln(k!) for k >= 0.
double ln_factorial(int k);

}  // namespace ringkepler::specfun
