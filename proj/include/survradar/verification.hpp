#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "survradar/analysis.hpp"
#include "survradar/oracles.hpp"

namespace survradar {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // worst observed value of the checked quantity
    double tolerance = 0.0;  // bound it was held to
    std::string detail;
    bool informational = false;  // reported only, never fails
};

using AllocationSolver =
    std::function<PowerAllocation(const SystemConfig&, const ChannelSet&, const std::vector<BeamformerSet>&)>;

/// Closed-form allocations against the convex oracle on random instances at
/// (n_antennas, n_rf): objective within 1e-5 relative, variables within 1e-4 of
/// the instance scale, KKT residual below 1e-6, and radar floors binding.
/// The solvers are parameters so that a deliberately broken one can be shown to fail.
struct OracleCheckOptions {
    int n_antennas = 8;
    int n_rf = 2;
    int instances = 200;
    std::uint64_t seed = 101;
    AllocationSolver power_min = solve_power_min;
    AllocationSolver jam_max = solve_jam_max;
};

CheckResult check_power_min_oracle(const OracleCheckOptions& opt);
CheckResult check_jam_max_oracle(const OracleCheckOptions& opt);
/// Wait-interval jamming is never used at the optimum of the in-phase problem.
CheckResult check_wait_interval_oracle(int n_antennas, int n_rf, int instances, std::uint64_t seed);

/// Closed-form threshold against the total power of the PowerMin allocation.
CheckResult check_threshold_identity(int instances, std::uint64_t seed);
/// Algorithm 1 picks PowerMin at p_max = p_th, JamMax one ulp below, with continuous total power.
CheckResult check_case_switch(int instances, std::uint64_t seed);
/// SINR_R = gamma_r in both cases and SINR_D = gamma_s in the PowerMin case, through the metrics.
CheckResult check_binding_constraints(int instances, std::uint64_t seed);

CheckResult check_power_min_probability();
/// Closed form (given variant) against the two-stage integral on a 5x5x5 grid.
CheckResult check_jam_max_probability(CoefficientVariant variant);
/// Which coefficient variant agrees with the integral.
std::string coefficient_variant_verdict(const CheckResult& factorial, const CheckResult& literal);

/// Optimal combiners against random combiners in the same null-space family.
CheckResult check_combiner_optimality(int instances, int random_per_instance, std::uint64_t seed);
/// Orthonormality and null-space residuals of Z_s and Z_r, and the interference-free SINR forms.
CheckResult check_null_space(int instances, std::uint64_t seed);
/// Gain identity, basis orthogonality and codeword selection against brute force.
CheckResult check_beam_invariants(int seeds, std::uint64_t seed);

/// Monte Carlo success probability against the analytic formulas (reported only).
CheckResult report_monte_carlo_vs_analysis(std::size_t n_trials, std::uint64_t seed);

enum class VerificationDepth { Quick, Full };

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::string coefficient_verdict;

    bool all_passed() const;
};

VerificationReport run_verification_suite(VerificationDepth depth);

std::string format_check(const CheckResult& c);
std::string format_report(const VerificationReport& r);

}  // namespace survradar
