#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "survradar/analysis.hpp"

namespace survradar {

enum class Scale { Desk, Paper };

/// One Monte Carlo sweep: a single parameter stepped over `values`, every
/// scheme evaluated on the same channel draws at every value.
struct SweepSpec {
    std::string figure_tag;
    std::string param_name;  // an apply_override key
    bool param_is_db = true;
    std::vector<double> values;
    std::vector<Scheme> schemes;
    std::size_t n_trials = 2000;
    std::uint64_t master_seed = 1;
    SystemConfig base;
    std::vector<std::pair<std::string, double>> overrides;

    /// Throws ConfigError if values are empty or unsorted, n_trials is zero, or
    /// a key is unknown.
    void validate() const;
    /// Base config with the overrides and then the swept value applied.
    SystemConfig config_at(double value) const;
};

/// Presets for fig5 to fig9. Desk scale is N = 16, M = 3; paper scale is N = 128, M = 4.
SweepSpec figure_preset(const std::string& tag, Scale scale = Scale::Desk);

struct ResultRow {
    std::string figure_tag;
    std::string scheme;
    std::string param_name;
    double param_value_linear = 0.0;
    double param_value_db = 0.0;
    double success_prob = 0.0;
    double std_err = 0.0;
    double case_powermin_frac = 0.0;
    double infeasible_frac = 0.0;
    double mean_sinr_r_db = 0.0;
};

struct ResultTable {
    SweepSpec spec;
    std::vector<ResultRow> rows;  // value-major, then schemes in the order of SweepSpec::schemes

    /// Row for (value index, scheme); throws std::out_of_range.
    const ResultRow& at(std::size_t value_index, Scheme scheme) const;
};

ResultTable run_sweep(const SweepSpec& spec, unsigned threads = 0);

std::string to_csv(const ResultTable& table);
nlohmann::json to_json(const ResultTable& table);

struct BeampatternTable {
    SystemConfig cfg;
    std::uint64_t seed = 0;
    int direction = 0;
    std::vector<double> sin_values;
    std::vector<double> gain_db;  // relative to the peak
    std::vector<int> lobes;       // sample indices of the dominant lobes
    double off_lobe_db = 0.0;     // mean gain away from the lobes, relative to the peak
};

/// Transmit pattern of direction n for one channel draw, before power
/// allocation: the digital vector is v_jam + j v_radar.
BeampatternTable run_beampattern(const SystemConfig& cfg, std::uint64_t seed, int n, int samples);

std::string to_csv(const BeampatternTable& table);
nlohmann::json to_json(const BeampatternTable& table);

/// Deterministic fixed-precision formatting used by every writer.
std::string format_number(double v);

std::string version_string();

}  // namespace survradar
