#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "survradar/metrics.hpp"

namespace survradar {

/// Schemes compared in the experiments. The first three share the Algorithm 1
/// transmit side and differ in the receive combiners; the forced schemes use the
/// optimal combiners with one closed form regardless of p_max.
enum class Scheme { Optimal, MRC, SurveillanceCentric, ForcedPowerMin, ForcedJamMax };

inline constexpr std::array<Scheme, 5> kAllSchemes = {Scheme::Optimal, Scheme::MRC, Scheme::SurveillanceCentric,
                                                      Scheme::ForcedPowerMin, Scheme::ForcedJamMax};

std::string to_string(Scheme s);
/// Throws ConfigError for an unknown name.
Scheme scheme_from_string(const std::string& name);

enum class TrialFallback { None, MonitoringInfeasible, RadarInfeasible, OverJammed, DegenerateGeometry };

struct TrialOutcome {
    TrialMetrics metrics;
    AllocationCase case_label = AllocationCase::JamMax;
    TrialFallback fallback = TrialFallback::None;

    /// True when the closed forms could not be applied as intended.
    bool infeasible() const { return fallback != TrialFallback::None; }
};

/// Full chain for one channel draw: beamformers, allocation, combiners, metrics.
/// Infeasible instances fall back to a radar-only allocation and are flagged;
/// degenerate geometry yields an unsuccessful trial.
TrialOutcome run_trial(const Scenario& sc, const ChannelSet& ch, Scheme scheme);

/// Same as run_trial for several schemes sharing one set of beamformers.
std::vector<TrialOutcome> run_trial(const Scenario& sc, const ChannelSet& ch, const std::vector<Scheme>& schemes);

/// Production path without fallbacks (used for timing): beamformers, Algorithm 1,
/// optimal combiners, metrics. Exceptions propagate.
TrialMetrics run_pipeline(const Scenario& sc, const ChannelSet& ch);

}  // namespace survradar
