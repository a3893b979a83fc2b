#pragma once

namespace survradar {

/// Exponential integral E_1(x) = integral from x to infinity of e^{-t}/t, x > 0.
double expint_e1(double x);

/// e^x x^k Gamma(-k, x) for integer k >= 0 and x > 0. This scaled form stays
/// O(1) where Gamma(-k, x) itself under- or overflows.
double scaled_upper_gamma_neg(int k, double x);

/// Extended-precision variants. Alternating sums of scaled gammas lose about
/// x^k of relative accuracy, so callers that sum them work in long double.
long double expint_e1_ld(long double x);
long double scaled_upper_gamma_neg_ld(int k, long double x);

/// Upper incomplete gamma Gamma(-k, x) for integer k >= 0, x > 0.
double upper_gamma_neg(int k, double x);

/// P(X >= a) for X ~ Gamma(shape, 1) with integer shape >= 1: e^{-a} sum_{k<shape} a^k/k!.
double erlang_tail(int shape, double a);

}  // namespace survradar
