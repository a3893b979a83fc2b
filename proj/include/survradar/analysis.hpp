#pragma once

#include <cstdint>
#include <vector>

#include "survradar/pipeline.hpp"

namespace survradar {

/// Parameters of the analytic success probabilities. P_J is the mean jamming
/// amplitude squared per direction; P_J = 0 means no jamming.
struct ProbabilityInputs {
    double rho_sd = 10.0;
    double rho_se = 1.0;
    double rho_ed = 1.0;
    double sigma2 = 1.0;
    double sigma2_tilde = 2.0;
    double p_s = 10.0;
    double gamma_s = 1.0;
    int n_rf = 4;
    double p_j = 1.0;

    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

/// P(SINR_E >= gamma_s) when SINR_D is pinned at gamma_s: Erlang tail with
/// M-1 stages and a = sigma~^2 gamma_s / (p_s rho_se).
double success_prob_power_min(const ProbabilityInputs& in);

enum class CoefficientVariant {
    Factorial,  // 1 / (k! (M-2-k)!)
    Literal,    // 1 / (k! (M-2-k)), singular at k = M-2
};

/// Closed-form P(SINR_E >= SINR_D) with Exp(rho_sd) suspicious gain and
/// Gamma(M-1, rho_se), Gamma(M-1, rho_ed) eavesdropping and jamming gains.
/// The Literal variant is kept only so the verification suite can show that it
/// disagrees with the integral; it may return a non-finite value.
double success_prob_jam_max(const ProbabilityInputs& in, CoefficientVariant variant = CoefficientVariant::Factorial);

/// Direct numerical integration of the Erlang tail density.
double success_prob_power_min_quadrature(const ProbabilityInputs& in);

/// Two-stage numerical integration: outer over the jamming gain, inner over the
/// eavesdropping gain of the conditional failure probability.
double success_prob_jam_max_quadrature(const ProbabilityInputs& in);

/// P_J = p_max/(N lambda_r) - (1/N) sum_n C_2,n^2 for one channel draw.
double effective_jamming_power(const SystemConfig& cfg, const std::vector<BeamformerSet>& bfs);

ProbabilityInputs probability_inputs(const SystemConfig& cfg, double p_j);

struct MonteCarloResult {
    Scheme scheme = Scheme::Optimal;
    std::size_t n_trials = 0;
    double estimate = 0.0;
    double std_err = 0.0;
    std::size_t powermin_count = 0;
    std::size_t infeasible_count = 0;
    std::size_t degenerate_count = 0;
    std::size_t gamma_s_violated_count = 0;
    /// Mean over trials and directions of linear SINR_R (degenerate trials excluded); NaN if none.
    double mean_sinr_r = 0.0;
};

/// Common-random-number Monte Carlo: trial t of every scheme uses the channel
/// draw generate_channels(cfg, trial_stream_key(master_seed, t)).
std::vector<MonteCarloResult> monte_carlo(const SystemConfig& cfg, const std::vector<Scheme>& schemes,
                                          std::size_t n_trials, std::uint64_t master_seed, unsigned threads = 0);

MonteCarloResult monte_carlo_success_prob(const SystemConfig& cfg, Scheme scheme, std::size_t n_trials,
                                          std::uint64_t master_seed, unsigned threads = 0);

}  // namespace survradar
