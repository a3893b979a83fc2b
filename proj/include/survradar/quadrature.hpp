#pragma once

#include <functional>

namespace survradar {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

struct QuadratureOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration over [a, b].
/// Throws OracleFailure if the tolerance is not met within the subdivision budget.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

/// Integral over [a, infinity) using x = a + scale t/(1-t) on [0, 1). `scale`
/// should be the length over which f decays; a badly chosen scale can let a
/// narrow peak slip between the first nodes unnoticed.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opt = {}, double scale = 1.0);

}  // namespace survradar
