#include "survradar/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "survradar/types.hpp"

namespace survradar {

namespace {

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "n_antennas", "n_rf", "noise_rx_monitor", "noise_rx_d", "gamma_s", "gamma_s_db",
        "gamma_r",    "gamma_r_db", "p_s", "p_s_db", "p_max", "p_max_db", "p_max_norm_db",
        "lambda_r",   "lambda_w", "rho_sd", "rho_se", "rho_ed", "antenna_spacing_ratio",
        "beta_magnitude"};
    return keys;
}

int as_count(const std::string& key, double value) {
    if (value != std::floor(value) || value < 1 || value > 1 << 20)
        throw ConfigError(key + " must be a positive integer");
    return static_cast<int>(value);
}

}  // namespace

void SystemConfig::validate() const {
    if (n_antennas < 2) throw ConfigError("n_antennas must be at least 2");
    if (n_rf < 2) throw ConfigError("n_rf must be at least 2 (one radar chain plus one eavesdropping chain)");
    if (n_rf > n_antennas) throw ConfigError("n_rf must not exceed n_antennas");
    const std::pair<const char*, double> positives[] = {
        {"noise_rx_monitor", noise_rx_monitor}, {"noise_rx_d", noise_rx_d}, {"gamma_s", gamma_s},
        {"gamma_r", gamma_r}, {"p_s", p_s}, {"p_max", p_max}, {"rho_sd", rho_sd},
        {"rho_se", rho_se}, {"rho_ed", rho_ed}, {"antenna_spacing_ratio", antenna_spacing_ratio},
        {"beta_magnitude", beta_magnitude}};
    for (const auto& [name, v] : positives)
        if (!positive(v)) throw ConfigError(std::string(name) + " must be strictly positive");
    if (!(lambda_r > 0.0 && lambda_r < 1.0) || !(lambda_w > 0.0 && lambda_w < 1.0))
        throw ConfigError("lambda_r and lambda_w must lie in (0, 1)");
    if (std::abs(lambda_r + lambda_w - 1.0) > 1e-12)
        throw ConfigError("lambda_r + lambda_w must equal 1");
}

SystemConfig SystemConfig::paper_defaults() { return SystemConfig{}; }

SystemConfig SystemConfig::desk_defaults() {
    SystemConfig cfg;
    cfg.n_antennas = 16;
    cfg.n_rf = 3;
    cfg.p_max = 100.0 * cfg.n_antennas * cfg.noise_rx_d;
    return cfg;
}

void apply_override(SystemConfig& cfg, const std::string& key, double value) {
    if (!std::isfinite(value)) throw ConfigError("non-finite value for " + key);
    if (key == "n_antennas") cfg.n_antennas = as_count(key, value);
    else if (key == "n_rf") cfg.n_rf = as_count(key, value);
    else if (key == "noise_rx_monitor") cfg.noise_rx_monitor = value;
    else if (key == "noise_rx_d") cfg.noise_rx_d = value;
    else if (key == "gamma_s") cfg.gamma_s = value;
    else if (key == "gamma_s_db") cfg.gamma_s = db_to_linear(value);
    else if (key == "gamma_r") cfg.gamma_r = value;
    else if (key == "gamma_r_db") cfg.gamma_r = db_to_linear(value);
    else if (key == "p_s") cfg.p_s = value;
    else if (key == "p_s_db") cfg.p_s = db_to_linear(value);
    else if (key == "p_max") cfg.p_max = value;
    else if (key == "p_max_db") cfg.p_max = db_to_linear(value);
    else if (key == "p_max_norm_db") cfg.p_max = cfg.n_antennas * cfg.noise_rx_d * db_to_linear(value);
    else if (key == "lambda_r") { cfg.lambda_r = value; cfg.lambda_w = 1.0 - value; }
    else if (key == "lambda_w") { cfg.lambda_w = value; cfg.lambda_r = 1.0 - value; }
    else if (key == "rho_sd") cfg.rho_sd = value;
    else if (key == "rho_se") cfg.rho_se = value;
    else if (key == "rho_ed") cfg.rho_ed = value;
    else if (key == "rho_ratio_db") cfg.rho_sd = cfg.rho_se * db_to_linear(value);
    else if (key == "antenna_spacing_ratio") cfg.antenna_spacing_ratio = value;
    else if (key == "beta_magnitude") cfg.beta_magnitude = value;
    else throw ConfigError("unknown configuration key '" + key + "'");
}

SystemConfig config_from_json(const nlohmann::json& doc, const SystemConfig& base) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    std::map<std::string, double> values;
    for (const auto& [key, v] : doc.items()) {
        if (!known_keys().count(key)) throw ConfigError("unknown configuration key '" + key + "'");
        if (!v.is_number()) throw ConfigError("configuration key '" + key + "' must be a number");
        values[key] = v.get<double>();
    }
    for (const char* stem : {"gamma_s", "gamma_r", "p_s", "p_max"}) {
        const std::string s(stem);
        int given = values.count(s) + values.count(s + "_db") + (s == "p_max" ? values.count("p_max_norm_db") : 0);
        if (given > 1) throw ConfigError("'" + s + "' given more than once (linear and dB forms)");
    }
    if (values.count("lambda_r") && values.count("lambda_w") &&
        std::abs(values["lambda_r"] + values["lambda_w"] - 1.0) > 1e-12)
        throw ConfigError("lambda_r + lambda_w must equal 1");

    SystemConfig cfg = base;
    // p_max_norm_db depends on N and sigma^2, so it goes last.
    for (const auto& [key, v] : values)
        if (key != "p_max_norm_db") apply_override(cfg, key, v);
    // Each of the pair sets the other as its complement; when both are given keep them verbatim.
    if (values.count("lambda_r") && values.count("lambda_w")) {
        cfg.lambda_r = values["lambda_r"];
        cfg.lambda_w = values["lambda_w"];
    }
    if (values.count("p_max_norm_db")) apply_override(cfg, "p_max_norm_db", values["p_max_norm_db"]);
    cfg.validate();
    return cfg;
}

SystemConfig load_config(const std::string& path, const SystemConfig& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("malformed configuration file " + path + ": " + e.what());
    }
    return config_from_json(doc, base);
}

nlohmann::json config_to_json(const SystemConfig& cfg) {
    return nlohmann::json{{"n_antennas", cfg.n_antennas},
                          {"n_rf", cfg.n_rf},
                          {"noise_rx_monitor", cfg.noise_rx_monitor},
                          {"noise_rx_d", cfg.noise_rx_d},
                          {"gamma_s", cfg.gamma_s},
                          {"gamma_r", cfg.gamma_r},
                          {"p_s", cfg.p_s},
                          {"p_max", cfg.p_max},
                          {"lambda_r", cfg.lambda_r},
                          {"lambda_w", cfg.lambda_w},
                          {"rho_sd", cfg.rho_sd},
                          {"rho_se", cfg.rho_se},
                          {"rho_ed", cfg.rho_ed},
                          {"antenna_spacing_ratio", cfg.antenna_spacing_ratio},
                          {"beta_magnitude", cfg.beta_magnitude}};
}

}  // namespace survradar
