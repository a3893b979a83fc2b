#include "survradar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "survradar/experiments.hpp"
#include "survradar/verification.hpp"

namespace survradar {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string scale = "desk";
    std::string out_path;
    std::string format = "csv";
    bool echo = false;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_scale = true) {
    cmd->add_option("--config", o.config_path, "JSON configuration file (SystemConfig field names)");
    cmd->add_option("--set", o.overrides, "override key=value, applied after --config")->take_all();
    if (with_scale) cmd->add_option("--scale", o.scale, "base parameter block")->check(CLI::IsMember({"desk", "paper"}));
    cmd->add_option("--out", o.out_path, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--echo", o.echo, "also print the output to stdout when --out is given");
    cmd->add_option("--threads", o.threads, "worker threads (default: SURVRADAR_THREADS, 0 = all cores)");
}

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse '" + text + "' as a number for " + what);
    }
}

std::vector<std::pair<std::string, double>> parse_overrides(const std::vector<std::string>& items) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("override '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        out.emplace_back(key, parse_number(item.substr(eq + 1), key));
    }
    return out;
}

SystemConfig effective_config(const CommonOptions& o, Scale scale) {
    SystemConfig cfg = scale == Scale::Desk ? SystemConfig::desk_defaults() : SystemConfig::paper_defaults();
    if (!o.config_path.empty()) cfg = load_config(o.config_path, cfg);
    for (const auto& [k, v] : parse_overrides(o.overrides)) {
        try {
            apply_override(cfg, k, v);
        } catch (const ConfigError& e) {
            throw UsageError(e.what());
        }
    }
    cfg.validate();
    return cfg;
}

Scale scale_of(const std::string& s) { return s == "paper" ? Scale::Paper : Scale::Desk; }

void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error("cannot write " + o.out_path);
    f << text;
    if (!f) throw Error("write failed for " + o.out_path);
    if (o.echo) out << text;
}

std::string render(const CommonOptions& o, const ResultTable& t) {
    return o.format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t);
}

std::string render(const CommonOptions& o, const BeampatternTable& t) {
    return o.format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radar-assisted legitimate surveillance simulator", "survradar"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);

    // simulate
    CommonOptions sim_o;
    std::vector<std::string> sim_schemes = {"Optimal", "SurveillanceCentric", "MRC"};
    std::size_t sim_trials = 2000;
    std::uint64_t sim_seed = 1;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo success probability at one operating point");
    add_common(sim, sim_o);
    sim->add_option("--scheme", sim_schemes, "schemes to evaluate")->take_all();
    sim->add_option("--trials", sim_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed, "master seed");

    // figure
    CommonOptions fig_o;
    std::string fig_tag;
    std::size_t fig_trials = 2000;
    std::uint64_t fig_seed = 1;
    int fig_direction = -1;
    int fig_samples = 0;
    auto* fig = app.add_subcommand("figure", "Sweep behind one figure (fig4 is the beampattern)");
    add_common(fig, fig_o, false);
    std::optional<std::string> fig_scale;
    fig->add_option("--scale", fig_scale, "desk (default for fig5-fig9) or paper (default for fig4)")
        ->check(CLI::IsMember({"desk", "paper"}));
    fig->add_option("--tag", fig_tag, "figure tag")->required()->check(
        CLI::IsMember({"fig4", "fig5", "fig6", "fig7", "fig8", "fig9"}));
    fig->add_option("--trials", fig_trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    fig->add_option("--seed", fig_seed, "master seed");
    fig->add_option("--direction", fig_direction, "fig4 probe direction (default N/4)");
    fig->add_option("--samples", fig_samples, "fig4 angle samples (default 8N)");

    // beampattern
    CommonOptions bp_o;
    bp_o.scale = "paper";
    std::uint64_t bp_seed = 1;
    int bp_direction = -1;
    int bp_samples = 0;
    auto* bp = app.add_subcommand("beampattern", "Transmit beampattern of one direction before power allocation");
    add_common(bp, bp_o);
    bp->add_option("--seed", bp_seed, "channel seed");
    bp->add_option("--direction", bp_direction, "probe direction index, 0-based (default N/4)");
    bp->add_option("--samples", bp_samples, "angle samples (default 8N)");

    // verify
    std::string depth = "quick";
    auto* ver = app.add_subcommand("verify", "Run the oracle and invariant checks");
    ver->add_option("--depth", depth, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    // prob
    CommonOptions prob_o;
    std::string prob_case = "jam-max";
    std::string variant = "factorial";
    bool with_quadrature = false;
    ProbabilityInputs pin;
    std::optional<double> gamma_s_db;
    auto* prob = app.add_subcommand("prob", "Analytic eavesdropping success probability");
    prob->add_option("--case", prob_case, "power-min or jam-max")->check(CLI::IsMember({"power-min", "jam-max"}));
    prob->add_option("--m", pin.n_rf, "RF chains M");
    prob->add_option("--rho-sd", pin.rho_sd, "large-scale gain S->D");
    prob->add_option("--rho-se", pin.rho_se, "large-scale gain S->monitor");
    prob->add_option("--rho-ed", pin.rho_ed, "large-scale gain monitor->D");
    prob->add_option("--sigma2", pin.sigma2, "noise at the suspicious receiver");
    prob->add_option("--sigma2-tilde", pin.sigma2_tilde, "noise plus clutter at the monitor");
    prob->add_option("--p-s", pin.p_s, "suspicious transmit power");
    auto* gs = prob->add_option("--gamma-s", pin.gamma_s, "SINR_D target (linear)");
    prob->add_option("--gamma-s-db", gamma_s_db, "SINR_D target in dB")->excludes(gs);
    prob->add_option("--p-j", pin.p_j, "jamming power P_J");
    prob->add_option("--variant", variant, "coefficient variant")->check(CLI::IsMember({"factorial", "literal"}));
    prob->add_flag("--quadrature", with_quadrature, "also evaluate the numerical integral");
    prob->add_option("--out", prob_o.out_path, "output file (default: stdout)");
    prob->add_option("--format", prob_o.format, "output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version_string() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*sim) {
            SweepSpec spec;
            spec.figure_tag = "simulate";
            spec.base = effective_config(sim_o, scale_of(sim_o.scale));
            spec.param_name = "p_max";
            spec.param_is_db = false;
            spec.values = {spec.base.p_max};
            spec.n_trials = sim_trials;
            spec.master_seed = sim_seed;
            spec.schemes.clear();
            for (const auto& s : sim_schemes) {
                try {
                    spec.schemes.push_back(scheme_from_string(s));
                } catch (const ConfigError& e) {
                    throw UsageError(e.what());
                }
            }
            emit(sim_o, render(sim_o, run_sweep(spec, sim_o.threads)), out);
        } else if (*fig) {
            const Scale scale = scale_of(fig_scale.value_or(fig_tag == "fig4" ? "paper" : "desk"));
            const SystemConfig cfg = effective_config(fig_o, scale);
            if (fig_tag == "fig4") {
                const int n = fig_direction >= 0 ? fig_direction : cfg.n_antennas / 4;
                const int samples = fig_samples > 0 ? fig_samples : 8 * cfg.n_antennas;
                emit(fig_o, render(fig_o, run_beampattern(cfg, fig_seed, n, samples)), out);
            } else {
                SweepSpec spec = figure_preset(fig_tag, scale);
                spec.base = cfg;
                spec.n_trials = fig_trials;
                spec.master_seed = fig_seed;
                emit(fig_o, render(fig_o, run_sweep(spec, fig_o.threads)), out);
            }
        } else if (*bp) {
            const SystemConfig cfg = effective_config(bp_o, scale_of(bp_o.scale));
            const int n = bp_direction >= 0 ? bp_direction : cfg.n_antennas / 4;
            const int samples = bp_samples > 0 ? bp_samples : 8 * cfg.n_antennas;
            emit(bp_o, render(bp_o, run_beampattern(cfg, bp_seed, n, samples)), out);
        } else if (*ver) {
            const auto rep = run_verification_suite(depth == "full" ? VerificationDepth::Full : VerificationDepth::Quick);
            out << format_report(rep);
            return rep.all_passed() ? 0 : 1;
        } else if (*prob) {
            if (gamma_s_db) pin.gamma_s = db_to_linear(*gamma_s_db);
            try {
                pin.validate();
            } catch (const ConfigError& e) {
                throw UsageError(e.what());
            }
            const bool jam = prob_case == "jam-max";
            const double value = jam ? success_prob_jam_max(pin, variant == "factorial" ? CoefficientVariant::Factorial
                                                                                        : CoefficientVariant::Literal)
                                     : success_prob_power_min(pin);
            std::optional<double> quad;
            if (with_quadrature)
                quad = jam ? success_prob_jam_max_quadrature(pin) : success_prob_power_min_quadrature(pin);
            std::string text;
            if (prob_o.format == "json") {
                nlohmann::json j = {{"version", version_string()},
                                    {"case", prob_case},
                                    {"variant", jam ? variant : "n/a"},
                                    {"inputs",
                                     {{"m", pin.n_rf}, {"rho_sd", pin.rho_sd}, {"rho_se", pin.rho_se},
                                      {"rho_ed", pin.rho_ed}, {"sigma2", pin.sigma2}, {"sigma2_tilde", pin.sigma2_tilde},
                                      {"p_s", pin.p_s}, {"gamma_s", pin.gamma_s}, {"p_j", pin.p_j}}},
                                    {"success_prob", nlohmann::json::parse(format_number(value))}};
                if (quad) j["quadrature"] = nlohmann::json::parse(format_number(*quad));
                text = j.dump(2) + "\n";
            } else {
                text = "case,variant,success_prob,quadrature\n" + prob_case + "," + (jam ? variant : "n/a") + "," +
                       format_number(value) + "," + (quad ? format_number(*quad) : "") + "\n";
            }
            emit(prob_o, text, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace survradar
