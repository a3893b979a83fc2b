#include "survradar/analysis.hpp"

#include <cmath>
#include <limits>

#include "survradar/parallel.hpp"
#include "survradar/power_alloc.hpp"
#include "survradar/quadrature.hpp"
#include "survradar/rng.hpp"
#include "survradar/special.hpp"

namespace survradar {

void ProbabilityInputs::validate() const {
    if (n_rf < 2) throw ConfigError("n_rf must be at least 2");
    for (double v : {rho_sd, rho_se, rho_ed, sigma2, sigma2_tilde, p_s, gamma_s})
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("probability inputs must be positive and finite");
    if (!(p_j >= 0.0) || !std::isfinite(p_j)) throw ConfigError("P_J must be nonnegative and finite");
}

double success_prob_power_min(const ProbabilityInputs& in) {
    in.validate();
    return erlang_tail(in.n_rf - 1, in.sigma2_tilde * in.gamma_s / (in.p_s * in.rho_se));
}

double success_prob_jam_max(const ProbabilityInputs& in, CoefficientVariant variant) {
    in.validate();
    const int m = in.n_rf;
    if (in.p_j == 0.0) return 1.0 - std::pow(1.0 + in.rho_se * in.sigma2 / (in.rho_sd * in.sigma2_tilde), -(m - 1));
    using ld = long double;
    const ld b = static_cast<ld>(in.rho_sd) * in.sigma2_tilde / (static_cast<ld>(in.rho_se) * in.rho_ed * in.p_j);
    const ld c = static_cast<ld>(in.sigma2) / (static_cast<ld>(in.rho_ed) * in.p_j) + b;
    ld sum = 0.0L;
    for (int k = 0; k <= m - 2; ++k) {
        const ld second = variant == CoefficientVariant::Factorial ? std::tgamma(static_cast<ld>(m - 1 - k))
                                                                   : static_cast<ld>(m - 2 - k);
        const ld coeff = (k % 2 == 0 ? 1.0L : -1.0L) / (std::tgamma(static_cast<ld>(k + 1)) * second);
        sum += coeff * scaled_upper_gamma_neg_ld(k, c);
    }
    return static_cast<double>(1.0L - std::pow(b, m - 1) * sum);
}

namespace {

// Density of Gamma(shape, 1) at u >= 0.
double gamma_density(int shape, double u) {
    if (u <= 0.0) return shape == 1 && u == 0.0 ? 1.0 : 0.0;
    return std::exp((shape - 1) * std::log(u) - u - std::lgamma(shape));
}

const QuadratureOptions kTight{1e-14, 1e-12, 20000};

}  // namespace

double success_prob_power_min_quadrature(const ProbabilityInputs& in) {
    in.validate();
    const int shape = in.n_rf - 1;
    const double a = in.sigma2_tilde * in.gamma_s / (in.p_s * in.rho_se);
    return integrate_to_infinity([&](double u) { return gamma_density(shape, u); }, a, kTight).value;
}

double success_prob_jam_max_quadrature(const ProbabilityInputs& in) {
    in.validate();
    const int shape = in.n_rf - 1;
    // Failure given both gains: P(gamma_sd > gamma_se (P_J gamma_ed + sigma^2) / sigma~^2)
    // = exp(-gamma_se (P_J gamma_ed + sigma^2) / (sigma~^2 rho_sd)).
    auto inner = [&](double u_ed) {
        const double rate = in.rho_se * (in.p_j * in.rho_ed * u_ed + in.sigma2) / (in.sigma2_tilde * in.rho_sd);
        auto f = [&](double v) { return gamma_density(shape, v) * std::exp(-rate * v); };
        return integrate_to_infinity(f, 0.0, kTight, 1.0 / (1.0 + rate)).value;
    };
    auto outer = [&](double u_ed) { return gamma_density(shape, u_ed) * inner(u_ed); };
    return 1.0 - integrate_to_infinity(outer, 0.0, kTight).value;
}

double effective_jamming_power(const SystemConfig& cfg, const std::vector<BeamformerSet>& bfs) {
    const double n = static_cast<double>(bfs.size());
    return cfg.p_max / (n * cfg.lambda_r) - radar_floor_amplitudes(cfg, bfs).squaredNorm() / n;
}

ProbabilityInputs probability_inputs(const SystemConfig& cfg, double p_j) {
    ProbabilityInputs in;
    in.rho_sd = cfg.rho_sd;
    in.rho_se = cfg.rho_se;
    in.rho_ed = cfg.rho_ed;
    in.sigma2 = cfg.noise_rx_d;
    in.sigma2_tilde = cfg.noise_rx_monitor;
    in.p_s = cfg.p_s;
    in.gamma_s = cfg.gamma_s;
    in.n_rf = cfg.n_rf;
    in.p_j = p_j;
    return in;
}

namespace {

struct TrialRecord {
    bool success = false;
    bool powermin = false;
    bool infeasible = false;
    bool degenerate = false;
    bool gamma_s_violated = false;
    double mean_sinr_r = 0.0;
};

}  // namespace

std::vector<MonteCarloResult> monte_carlo(const SystemConfig& cfg, const std::vector<Scheme>& schemes,
                                          std::size_t n_trials, std::uint64_t master_seed, unsigned threads) {
    if (n_trials < 1) throw ConfigError("n_trials must be at least 1");
    if (schemes.empty()) throw ConfigError("at least one scheme is required");
    cfg.validate();
    const Scenario sc(cfg);
    const std::size_t n_s = schemes.size();
    std::vector<TrialRecord> records(n_trials * n_s);

    parallel_for(
        n_trials,
        [&](std::size_t t) {
            const auto ch = generate_channels(cfg, trial_stream_key(master_seed, t));
            const auto outcomes = run_trial(sc, ch, schemes);
            for (std::size_t s = 0; s < n_s; ++s) {
                const auto& o = outcomes[s];
                auto& r = records[t * n_s + s];
                r.success = o.metrics.success;
                r.powermin = o.case_label == AllocationCase::PowerMin;
                r.infeasible = o.infeasible();
                r.degenerate = o.fallback == TrialFallback::DegenerateGeometry;
                r.gamma_s_violated = o.metrics.gamma_s_violated;
                r.mean_sinr_r = r.degenerate ? 0.0 : o.metrics.sinr_r.mean();
            }
        },
        threads);

    std::vector<MonteCarloResult> out(n_s);
    for (std::size_t s = 0; s < n_s; ++s) {
        auto& res = out[s];
        res.scheme = schemes[s];
        res.n_trials = n_trials;
        std::size_t successes = 0;
        std::size_t sinr_count = 0;
        double sinr_sum = 0.0;
        for (std::size_t t = 0; t < n_trials; ++t) {
            const auto& r = records[t * n_s + s];
            successes += r.success;
            res.powermin_count += r.powermin;
            res.infeasible_count += r.infeasible;
            res.degenerate_count += r.degenerate;
            res.gamma_s_violated_count += r.gamma_s_violated;
            if (!r.degenerate) {
                sinr_sum += r.mean_sinr_r;
                ++sinr_count;
            }
        }
        const double n = static_cast<double>(n_trials);
        res.estimate = static_cast<double>(successes) / n;
        res.std_err = std::sqrt(res.estimate * (1.0 - res.estimate) / n);
        res.mean_sinr_r = sinr_count > 0 ? sinr_sum / static_cast<double>(sinr_count)
                                         : std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

MonteCarloResult monte_carlo_success_prob(const SystemConfig& cfg, Scheme scheme, std::size_t n_trials,
                                          std::uint64_t master_seed, unsigned threads) {
    return monte_carlo(cfg, {scheme}, n_trials, master_seed, threads).front();
}

}  // namespace survradar
