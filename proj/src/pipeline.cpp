#include "survradar/pipeline.hpp"

#include <optional>

namespace survradar {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::Optimal: return "Optimal";
        case Scheme::MRC: return "MRC";
        case Scheme::SurveillanceCentric: return "SurveillanceCentric";
        case Scheme::ForcedPowerMin: return "ForcedPowerMin";
        case Scheme::ForcedJamMax: return "ForcedJamMax";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& name) {
    for (Scheme s : kAllSchemes)
        if (to_string(s) == name) return s;
    throw ConfigError("unknown scheme '" + name + "'");
}

namespace {

struct Allocated {
    PowerAllocation alloc;
    TrialFallback fallback = TrialFallback::None;
};

Allocated allocate_dispatch(const Scenario& sc, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    try {
        auto a = algorithm1(sc.cfg, ch, bfs);
        return {a, a.gamma_s_violated ? TrialFallback::OverJammed : TrialFallback::None};
    } catch (const MonitoringInfeasibleError&) {
        return {radar_only_allocation(sc.cfg, bfs, false), TrialFallback::MonitoringInfeasible};
    } catch (const RadarInfeasibleError&) {
        return {radar_only_allocation(sc.cfg, bfs, true), TrialFallback::RadarInfeasible};
    }
}

Allocated allocate_power_min(const Scenario& sc, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    try {
        return {solve_power_min(sc.cfg, ch, bfs), TrialFallback::None};
    } catch (const MonitoringInfeasibleError&) {
        return {radar_only_allocation(sc.cfg, bfs, false), TrialFallback::MonitoringInfeasible};
    } catch (const OverJammedError&) {
        auto a = radar_only_allocation(sc.cfg, bfs, false);
        a.gamma_s_violated = true;
        return {a, TrialFallback::OverJammed};
    }
}

Allocated allocate_jam_max(const Scenario& sc, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    try {
        return {solve_jam_max(sc.cfg, ch, bfs), TrialFallback::None};
    } catch (const RadarInfeasibleError&) {
        return {radar_only_allocation(sc.cfg, bfs, true), TrialFallback::RadarInfeasible};
    }
}

CombinerScheme combiner_of(Scheme s) {
    switch (s) {
        case Scheme::MRC: return CombinerScheme::MRC;
        case Scheme::SurveillanceCentric: return CombinerScheme::SurveillanceCentric;
        default: return CombinerScheme::Optimal;
    }
}

TrialOutcome degenerate_outcome(const Scenario& sc) {
    TrialOutcome o;
    o.fallback = TrialFallback::DegenerateGeometry;
    o.metrics.sinr_r = rvec::Zero(static_cast<Eigen::Index>(sc.grid.size()));
    o.metrics.success = false;
    return o;
}

}  // namespace

std::vector<TrialOutcome> run_trial(const Scenario& sc, const ChannelSet& ch, const std::vector<Scheme>& schemes) {
    std::vector<BeamformerSet> bfs;
    try {
        bfs = build_beamformers(sc, ch);
    } catch (const DegenerateGeometryError&) {
        return std::vector<TrialOutcome>(schemes.size(), degenerate_outcome(sc));
    } catch (const DegenerateInputError&) {
        return std::vector<TrialOutcome>(schemes.size(), degenerate_outcome(sc));
    }

    // Allocations are computed lazily and shared between schemes that use the same rule.
    std::array<std::optional<Allocated>, 3> cache;
    auto allocation_for = [&](Scheme s) -> const Allocated& {
        const int slot = s == Scheme::ForcedPowerMin ? 1 : s == Scheme::ForcedJamMax ? 2 : 0;
        if (!cache[slot]) {
            cache[slot] = slot == 0   ? allocate_dispatch(sc, ch, bfs)
                          : slot == 1 ? allocate_power_min(sc, ch, bfs)
                                      : allocate_jam_max(sc, ch, bfs);
        }
        return *cache[slot];
    };

    std::vector<TrialOutcome> out;
    out.reserve(schemes.size());
    for (Scheme s : schemes) {
        try {
            const auto& a = allocation_for(s);
            const auto rc = build_combiners(combiner_of(s), bfs, a.alloc.p_nr, sc.cfg.noise_rx_monitor);
            TrialOutcome o;
            o.metrics = evaluate_metrics(rc, ch, bfs, a.alloc, sc.cfg);
            o.case_label = a.alloc.case_label;
            o.fallback = a.fallback;
            out.push_back(std::move(o));
        } catch (const DegenerateGeometryError&) {
            out.push_back(degenerate_outcome(sc));
        } catch (const DegenerateInputError&) {
            out.push_back(degenerate_outcome(sc));
        }
    }
    return out;
}

TrialOutcome run_trial(const Scenario& sc, const ChannelSet& ch, Scheme scheme) {
    return run_trial(sc, ch, std::vector<Scheme>{scheme}).front();
}

TrialMetrics run_pipeline(const Scenario& sc, const ChannelSet& ch) {
    const auto bfs = build_beamformers(sc, ch);
    const auto alloc = algorithm1(sc.cfg, ch, bfs);
    const auto rc = build_combiners(CombinerScheme::Optimal, bfs, alloc.p_nr, sc.cfg.noise_rx_monitor);
    return evaluate_metrics(rc, ch, bfs, alloc, sc.cfg);
}

}  // namespace survradar
