#pragma once

#include <string>
#include <vector>

#include "survradar/beam_select.hpp"
#include "survradar/config.hpp"
#include "survradar/model.hpp"

namespace survradar {

enum class AllocationCase { PowerMin, JamMax };

std::string to_string(AllocationCase c);

struct PowerAllocation {
    AllocationCase case_label = AllocationCase::PowerMin;
    rvec p_jam;                // nonnegative, length N
    rvec p_radar;              // nonnegative, length N
    std::vector<cvec> p_nr;    // probe-interval digital vectors, length M each
    std::vector<cvec> p_nw;    // wait-interval digital vectors (always zero here)
    /// Minimum power meeting SINR_D = gamma_s; NaN when that problem is infeasible.
    double p_th = 0.0;
    double p_total = 0.0;
    /// Set when the radar probes alone already push SINR_D below gamma_s.
    bool gamma_s_violated = false;
    /// Directions that receive jamming power (those with the largest g_jam,n).
    std::vector<int> jam_support;
};

/// Per-instance constants shared by the closed forms.
struct AllocationTerms {
    double c1 = 0.0;    // N(|h_sd|^2 p_s / gamma_s - sigma^2)
    rvec c2_sq;         // gamma_r sigma~^2 / radar_gain_n
    rvec g_jam;
    rvec g_radar;
    double g_jam_max = 0.0;
    std::vector<int> support;
};

/// Directions whose g_jam,n equals the maximum within 1e-12 relative.
std::vector<int> jam_support(const rvec& g_jam);

AllocationTerms allocation_terms(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs);

/// Radar floor amplitudes C_2,n: the smallest p_radar,n meeting SINR_R,n = gamma_r.
rvec radar_floor_amplitudes(const SystemConfig& cfg, const std::vector<BeamformerSet>& bfs);

/// Minimum total power subject to SINR_D = gamma_s and SINR_R,n >= gamma_r.
/// Throws MonitoringInfeasibleError if |h_sd|^2 p_s <= sigma^2 gamma_s, and
/// OverJammedError if the radar probes alone already exceed the jamming budget.
PowerAllocation solve_power_min(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs);

/// Total power of the solve_power_min solution, in closed form.
double compute_p_th(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs);

/// Maximum jamming subject to total power p_max and the radar constraints.
/// Throws RadarInfeasibleError if p_max cannot cover the radar floor.
PowerAllocation solve_jam_max(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs);

/// Case dispatch: PowerMin when p_max >= p_th, JamMax otherwise (and whenever
/// the PowerMin problem is over-jammed, with gamma_s_violated set).
PowerAllocation algorithm1(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs);

/// Radar floor only, no jamming. With `fill_budget` the amplitudes are scaled so
/// that the total power equals p_max. Used as a fallback in Monte Carlo runs.
PowerAllocation radar_only_allocation(const SystemConfig& cfg, const std::vector<BeamformerSet>& bfs,
                                      bool fill_budget);

/// Fills p_nr = p_jam v_jam + j p_radar v_radar and p_nw = 0, then p_total.
/// The radar part sits in quadrature so it adds no cross term to the jamming power.
void assemble_tx_vectors(PowerAllocation& alloc, const std::vector<BeamformerSet>& bfs, const SystemConfig& cfg);

}  // namespace survradar
