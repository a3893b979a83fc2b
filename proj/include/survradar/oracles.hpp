#pragma once

#include <vector>

#include "survradar/beam_select.hpp"
#include "survradar/config.hpp"
#include "survradar/model.hpp"

namespace survradar {

/// Scalars of one allocation instance in squared-amplitude variables
/// x_jam,n = p_jam,n^2 and x_radar,n = p_radar,n^2.
struct OracleInstance {
    double lambda_r = 0.1;
    double lambda_w = 0.9;
    double c1 = 0.0;       // N(|h_sd|^2 p_s / gamma_s - sigma^2)
    double p_max = 0.0;
    rvec c2_sq;            // radar floors
    rvec g_jam;
    rvec g_radar;
    rvec g_sum;

    std::size_t size() const { return static_cast<std::size_t>(c2_sq.size()); }
};

/// Gathers the instance from beamformer gains (radar floors are recomputed here
/// from the radar gains, not taken from the allocation code).
OracleInstance make_oracle_instance(const SystemConfig& cfg, const ChannelSet& ch,
                                    const std::vector<BeamformerSet>& bfs);

enum class OracleProblem { PowerMin, JamMax };

struct OracleResult {
    rvec x_jam;
    rvec x_radar;
    /// PowerMin: lambda_r sum(x_jam + x_radar). JamMax: lambda_r sum(x_jam g_jam + x_radar g_radar).
    double objective = 0.0;
    /// Largest KKT violation (stationarity, feasibility, complementary slackness), scaled to be relative.
    double kkt_residual = 0.0;
    int iterations = 0;
};

/// Projected-gradient solution of the squared-amplitude linear program
///   PowerMin: min  lambda_r sum(x_j + x_r)  s.t. lambda_r sum(x_j g_j + x_r g_r) = C_1
///   JamMax:   max  lambda_r sum(x_j g_j + x_r g_r)  s.t. lambda_r sum(x_j + x_r) = p_max
/// with x_r >= C_2^2 and x_j >= 0. The projection onto the box-and-hyperplane set
/// is exact (bisection on its multiplier). Ties are broken towards the smallest
/// radar powers and an equal jamming split by perturbations below 1e-7 relative.
/// Throws OracleFailure on non-convergence or an infeasible instance.
OracleResult convex_oracle(OracleProblem problem, const OracleInstance& inst);

/// Objective value of a given allocation in the oracle's terms.
double oracle_objective(OracleProblem problem, const OracleInstance& inst, const rvec& x_jam, const rvec& x_radar);

/// KKT residual of a candidate point for the unperturbed linear program, with
/// duals recovered from the point itself.
double oracle_kkt_residual(OracleProblem problem, const OracleInstance& inst, const rvec& x_jam, const rvec& x_radar);

/// Solution of the in-phase power minimisation over the coordinates
/// (sum, new, wait): probe power along v_sum and v_new, wait-interval jamming
/// along v_jam, with the radar constraint
///   sqrt(g_radar/g_sum) sqrt(x_sum) + sqrt(g_jam/g_sum) sqrt(x_new) >= C_2.
/// Solved by bisection on the multiplier of the jamming equality.
struct WaitIntervalResult {
    rvec x_sum;
    rvec x_new;
    rvec x_wait;
    double objective = 0.0;
    double kkt_residual = 0.0;
    /// min_n (1 + mu g_jam,n): strictly positive means wait-interval jamming is never worth it.
    double wait_price_margin = 0.0;
};

WaitIntervalResult wait_interval_oracle(const OracleInstance& inst);

}  // namespace survradar
