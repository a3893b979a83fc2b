#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace survradar {

/// Scalar parameters of one monitor/suspicious-link scenario. All powers,
/// variances and SINR bounds are linear.
struct SystemConfig {
    int n_antennas = 128;          // N, transmit = receive antenna count
    int n_rf = 4;                  // M RF chains, M >= 2
    double noise_rx_monitor = 2.0; // effective noise + clutter variance at the monitor
    double noise_rx_d = 1.0;       // noise variance at the suspicious receiver
    double gamma_s = 1.0;          // minimum SINR_D
    double gamma_r = 10.0;         // minimum SINR_R
    double p_s = 10.0;             // suspicious transmit power
    double p_max = 12800.0;        // monitor power budget
    double lambda_r = 0.1;         // probe time ratio
    double lambda_w = 0.9;         // wait time ratio
    double rho_sd = 10.0;
    double rho_se = 1.0;
    double rho_ed = 1.0;
    double antenna_spacing_ratio = 0.5;  // d / lambda
    double beta_magnitude = 0.1;         // |beta_n|

    /// Throws ConfigError when an invariant is violated.
    void validate() const;

    /// N = 128, M = 4 parameter block of the reference simulation.
    static SystemConfig paper_defaults();
    /// Same physical parameters at N = 16, M = 3 for Monte Carlo sweeps.
    static SystemConfig desk_defaults();

    bool operator==(const SystemConfig&) const = default;
};

/// Applies one `key=value` assignment. Keys are the SystemConfig field names;
/// `gamma_s_db`, `gamma_r_db`, `p_s_db`, `p_max_db` and `p_max_norm_db`
/// (p_max / (N sigma^2) in dB) are converted to linear here. `rho_ratio_db`
/// sets rho_sd = rho_se * 10^(value/10); it is accepted here but not in files.
void apply_override(SystemConfig& cfg, const std::string& key, double value);

/// Parses a JSON object. Unknown keys and a key given both linear and in dB are
/// rejected. Fields not present keep the values of `base`.
SystemConfig config_from_json(const nlohmann::json& doc, const SystemConfig& base);
SystemConfig load_config(const std::string& path, const SystemConfig& base);

nlohmann::json config_to_json(const SystemConfig& cfg);

}  // namespace survradar
