#include "survradar/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "survradar/types.hpp"

namespace survradar {

namespace {

using ld = long double;
constexpr ld kTiny = 1e-300L;
constexpr ld kEps = std::numeric_limits<ld>::epsilon();

// Modified Lentz evaluation of the continued fraction
//   1/(x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(x+5-a - ...)))
// which equals e^x x^{-a} Gamma(a, x) for x > 0.
ld gamma_continued_fraction(ld a, ld x) {
    ld b = x + 1.0L - a;
    ld c = 1.0L / kTiny;
    ld d = 1.0L / b;
    ld h = d;
    for (int i = 1; i < 100000; ++i) {
        const ld an = -i * (i - a);
        b += 2.0L;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0L / d;
        const ld delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0L) < kEps) return h;
    }
    throw Error("incomplete gamma continued fraction did not converge");
}

}  // namespace

long double expint_e1_ld(long double x) {
    if (!(x > 0.0L)) throw std::domain_error("expint_e1 requires x > 0");
    if (x <= 1.0L) {
        ld sum = 0.0L;
        ld term = 1.0L;
        for (int k = 1; k < 400; ++k) {
            term *= -x / k;
            const ld add = term / k;
            sum += add;
            if (std::fabs(add) < kEps * std::fabs(sum)) break;
        }
        return -std::numbers::egamma_v<ld> - std::log(x) - sum;
    }
    return std::exp(-x) * gamma_continued_fraction(0.0L, x);
}

long double scaled_upper_gamma_neg_ld(int k, long double x) {
    if (k < 0) throw std::domain_error("scaled_upper_gamma_neg requires k >= 0");
    if (!(x > 0.0L)) throw std::domain_error("scaled_upper_gamma_neg requires x > 0");
    if (x > 2.0L) return gamma_continued_fraction(-static_cast<ld>(k), x);
    // G_0 = e^x E_1(x); G_k = (1 - x G_{k-1}) / k.
    ld g = std::exp(x) * expint_e1_ld(x);
    for (int j = 1; j <= k; ++j) g = (1.0L - x * g) / j;
    return g;
}

double expint_e1(double x) { return static_cast<double>(expint_e1_ld(x)); }

double scaled_upper_gamma_neg(int k, double x) { return static_cast<double>(scaled_upper_gamma_neg_ld(k, x)); }

double upper_gamma_neg(int k, double x) {
    return static_cast<double>(scaled_upper_gamma_neg_ld(k, x) * std::exp(-static_cast<ld>(x)) *
                               std::pow(static_cast<ld>(x), -k));
}

double erlang_tail(int shape, double a) {
    if (shape < 1) throw std::domain_error("erlang_tail requires shape >= 1");
    if (a <= 0.0) return 1.0;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < shape; ++k) {
        term *= a / k;
        sum += term;
    }
    return std::exp(-a) * sum;
}

}  // namespace survradar
