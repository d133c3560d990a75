#pragma once

// Regularized incomplete gamma P(a,x), evaluated by series expansion for
// x < a+1 and by a Lentz continued fraction otherwise.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lsdotb::detail {

// Series representation of P(a,x), valid/fast for x < a+1.
inline double gamma_p_series(double a, double x) {
    const double gln = std::lgamma(a);
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < 500; ++n) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) {
            return sum * std::exp(-x + a * std::log(x) - gln);
        }
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// Continued fraction for Q(a,x) = 1 - P(a,x), valid/fast for x >= a+1.
// Modified Lentz with b0 = 0.
inline double gamma_q_contfrac(double a, double x) {
    constexpr double kTiny = std::numeric_limits<double>::min() / 1e-16;
    const double gln = std::lgamma(a);
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= 1e-16) {
            return std::exp(-x + a * std::log(x) - gln) * h;
        }
    }
    throw std::runtime_error("gamma_q_contfrac: no convergence");
}

// Regularized lower incomplete gamma P(a,x); monotone in x, P(a,0) = 0.
inline double regularized_gamma_p(double a, double x) {
    if (a <= 0.0) throw std::domain_error("regularized_gamma_p: a must be > 0");
    if (x < 0.0) throw std::domain_error("regularized_gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

}  // namespace lsdotb::detail
