#include "survradar/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "survradar/metrics.hpp"

#ifndef SURVRADAR_VERSION
#define SURVRADAR_VERSION "v0.0.0"
#endif

namespace survradar {

std::string version_string() { return SURVRADAR_VERSION; }

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void SweepSpec::validate() const {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    if (!std::is_sorted(values.begin(), values.end())) throw ConfigError("sweep values must be sorted");
    if (n_trials < 1) throw ConfigError("n_trials must be at least 1");
    if (schemes.empty()) throw ConfigError("sweep needs at least one scheme");
    for (double v : values) config_at(v).validate();
}

SystemConfig SweepSpec::config_at(double value) const {
    SystemConfig cfg = base;
    for (const auto& [k, v] : overrides) apply_override(cfg, k, v);
    apply_override(cfg, param_name, value);
    return cfg;
}

namespace {

std::vector<double> grid(double first, double last, double step) {
    std::vector<double> v;
    const int count = static_cast<int>(std::lround((last - first) / step));
    for (int i = 0; i <= count; ++i) v.push_back(first + step * i);
    return v;
}

}  // namespace

SweepSpec figure_preset(const std::string& tag, Scale scale) {
    SweepSpec s;
    s.figure_tag = tag;
    s.base = scale == Scale::Desk ? SystemConfig::desk_defaults() : SystemConfig::paper_defaults();
    const std::vector<Scheme> compare = {Scheme::Optimal, Scheme::SurveillanceCentric, Scheme::MRC};
    if (tag == "fig5") {
        s.param_name = "p_max_norm_db";
        s.values = grid(-20.0, 40.0, 5.0);
        s.schemes = {Scheme::Optimal, Scheme::ForcedPowerMin, Scheme::ForcedJamMax};
    } else if (tag == "fig6") {
        s.param_name = "p_max_norm_db";
        s.values = grid(-20.0, 30.0, 5.0);
        s.schemes = compare;
    } else if (tag == "fig7") {
        s.param_name = "gamma_s_db";
        s.values = grid(-20.0, 20.0, 5.0);
        s.schemes = compare;
    } else if (tag == "fig8") {
        s.param_name = "rho_ratio_db";
        s.values = grid(0.0, 20.0, 5.0);
        s.schemes = compare;
    } else if (tag == "fig9") {
        s.param_name = "gamma_r_db";
        s.values = grid(0.0, 80.0, 10.0);
        s.schemes = compare;
    } else {
        throw ConfigError("unknown sweep preset '" + tag + "' (fig4 is a beampattern, see run_beampattern)");
    }
    return s;
}

const ResultRow& ResultTable::at(std::size_t value_index, Scheme scheme) const {
    const auto it = std::find(spec.schemes.begin(), spec.schemes.end(), scheme);
    if (it == spec.schemes.end()) throw std::out_of_range("scheme not in sweep");
    return rows.at(value_index * spec.schemes.size() + static_cast<std::size_t>(it - spec.schemes.begin()));
}

ResultTable run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.validate();
    ResultTable table;
    table.spec = spec;
    for (double v : spec.values) {
        const auto results = monte_carlo(spec.config_at(v), spec.schemes, spec.n_trials, spec.master_seed, threads);
        for (const auto& r : results) {
            ResultRow row;
            row.figure_tag = spec.figure_tag;
            row.scheme = to_string(r.scheme);
            row.param_name = spec.param_name;
            row.param_value_linear = spec.param_is_db ? db_to_linear(v) : v;
            row.param_value_db = spec.param_is_db ? v : linear_to_db(v);
            row.success_prob = r.estimate;
            row.std_err = r.std_err;
            const double n = static_cast<double>(r.n_trials);
            row.case_powermin_frac = static_cast<double>(r.powermin_count) / n;
            row.infeasible_frac = static_cast<double>(r.infeasible_count) / n;
            row.mean_sinr_r_db = linear_to_db(r.mean_sinr_r);
            table.rows.push_back(row);
        }
    }
    return table;
}

std::string to_csv(const ResultTable& table) {
    std::ostringstream out;
    out << "figure_tag,scheme,param_name,param_value_linear,param_value_db,success_prob,std_err,"
           "case_powermin_frac,infeasible_frac,mean_sinr_r_db\n";
    for (const auto& r : table.rows) {
        out << r.figure_tag << ',' << r.scheme << ',' << r.param_name << ',' << format_number(r.param_value_linear)
            << ',' << format_number(r.param_value_db) << ',' << format_number(r.success_prob) << ','
            << format_number(r.std_err) << ',' << format_number(r.case_powermin_frac) << ','
            << format_number(r.infeasible_frac) << ',' << format_number(r.mean_sinr_r_db) << '\n';
    }
    return out.str();
}

namespace {

// JSON numbers go through the same fixed formatting as the CSV; non-finite values become null.
nlohmann::json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return nlohmann::json::parse(format_number(v));
}

}  // namespace

nlohmann::json to_json(const ResultTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"figure_tag", r.figure_tag},
                        {"scheme", r.scheme},
                        {"param_name", r.param_name},
                        {"param_value_linear", number(r.param_value_linear)},
                        {"param_value_db", number(r.param_value_db)},
                        {"success_prob", number(r.success_prob)},
                        {"std_err", number(r.std_err)},
                        {"case_powermin_frac", number(r.case_powermin_frac)},
                        {"infeasible_frac", number(r.infeasible_frac)},
                        {"mean_sinr_r_db", number(r.mean_sinr_r_db)}});
    }
    nlohmann::json overrides = nlohmann::json::object();
    for (const auto& [k, v] : table.spec.overrides) overrides[k] = number(v);
    return {{"version", version_string()},
            {"figure_tag", table.spec.figure_tag},
            {"param_name", table.spec.param_name},
            {"n_trials", table.spec.n_trials},
            {"master_seed", table.spec.master_seed},
            {"config", config_to_json(table.spec.base)},
            {"overrides", overrides},
            {"rows", rows}};
}

BeampatternTable run_beampattern(const SystemConfig& cfg, std::uint64_t seed, int n, int samples) {
    cfg.validate();
    if (n < 0 || n >= cfg.n_antennas) throw ConfigError("direction index out of range");
    if (samples < 1) throw ConfigError("samples must be positive");
    const Scenario sc(cfg);
    const auto ch = generate_channels(cfg, seed);
    const auto ed = rank_codewords(sc.codebook, ch.h_ed);
    const auto se = rank_codewords(sc.codebook, ch.h_se);
    const auto bf = build_beamformer(sc, ch, ed, se, n);
    const cvec p = bf.bases.v_jam + cplx(0.0, 1.0) * bf.bases.v_radar;
    const rvec g = beampattern(bf, p, samples, cfg.antenna_spacing_ratio);

    BeampatternTable t;
    t.cfg = cfg;
    t.seed = seed;
    t.direction = n;
    const double peak = g.maxCoeff();
    for (int i = 0; i < samples; ++i) {
        t.sin_values.push_back(-1.0 + 2.0 * i / samples);
        t.gain_db.push_back(linear_to_db(g[i] / peak));
    }
    t.lobes = dominant_lobes(g, 10.0);
    t.off_lobe_db = off_lobe_level_db(g, t.lobes, std::max(1, samples / cfg.n_antennas));
    return t;
}

std::string to_csv(const BeampatternTable& t) {
    std::ostringstream out;
    out << "sin_theta,gain_db,dominant_lobe\n";
    for (std::size_t i = 0; i < t.sin_values.size(); ++i) {
        const bool lobe = std::find(t.lobes.begin(), t.lobes.end(), static_cast<int>(i)) != t.lobes.end();
        out << format_number(t.sin_values[i]) << ',' << format_number(t.gain_db[i]) << ',' << (lobe ? 1 : 0) << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const BeampatternTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < t.sin_values.size(); ++i)
        rows.push_back({{"sin_theta", number(t.sin_values[i])}, {"gain_db", number(t.gain_db[i])}});
    nlohmann::json lobes = nlohmann::json::array();
    for (int l : t.lobes) lobes.push_back(number(t.sin_values[l]));
    return {{"version", version_string()},
            {"figure_tag", "fig4"},
            {"seed", t.seed},
            {"direction", t.direction},
            {"config", config_to_json(t.cfg)},
            {"lobe_count", t.lobes.size()},
            {"lobe_sin_theta", lobes},
            {"off_lobe_db", number(t.off_lobe_db)},
            {"rows", rows}};
}

}  // namespace survradar
