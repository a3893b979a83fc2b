#include "survradar/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "survradar/types.hpp"

namespace survradar {

namespace {

// Kronrod abscissae (positive half, descending) and weights; Gauss weights for the
// embedded 7-point rule sit on the odd Kronrod nodes.
constexpr std::array<double, 8> kXk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                       0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                       0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                       0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                       0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                       0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                       0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b, int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kWk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXk[i];
        const double s = f(c - dx) + f(c + dx);
        kron += kWk[i] * s;
        if (i % 2 == 1) gauss += kWg[i / 2] * s;
    }
    evals += 15;
    if (!std::isfinite(kron)) throw OracleFailure("non-finite integrand in quadrature");
    return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opt) {
    QuadratureResult r;
    if (a == b) return r;
    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b, r.evaluations);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int splits = 0;
    while (error > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (++splits > opt.max_subdivisions) throw OracleFailure("quadrature did not reach the requested tolerance");
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid, r.evaluations);
        const Segment right = gauss_kronrod(f, mid, worst.b, r.evaluations);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // Re-sum occasionally to shed accumulated rounding in the running totals.
        if (splits % 64 == 0) {
            auto copy = heap;
            total = error = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                error += copy.top().error;
                copy.pop();
            }
        }
    }
    r.value = total;
    r.error_estimate = error;
    return r;
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opt, double scale) {
    if (!(scale > 0.0)) throw OracleFailure("integration scale must be positive");
    auto g = [&](double t) {
        const double one_minus = 1.0 - t;
        const double x = a + scale * t / one_minus;
        const double v = f(x);
        return v == 0.0 ? 0.0 : scale * v / (one_minus * one_minus);
    };
    return integrate(g, 0.0, 1.0, opt);
}

}  // namespace survradar
