#include "survradar/power_alloc.hpp"

#include <cmath>
#include <limits>

#include "survradar/metrics.hpp"

namespace survradar {

std::string to_string(AllocationCase c) { return c == AllocationCase::PowerMin ? "PowerMin" : "JamMax"; }

std::vector<int> jam_support(const rvec& g_jam) {
    std::vector<int> s;
    if (g_jam.size() == 0) return s;
    const double g_max = g_jam.maxCoeff();
    for (Eigen::Index n = 0; n < g_jam.size(); ++n)
        if (g_jam[n] >= g_max * (1.0 - 1e-12)) s.push_back(static_cast<int>(n));
    return s;
}

rvec radar_floor_amplitudes(const SystemConfig& cfg, const std::vector<BeamformerSet>& bfs) {
    rvec c2(static_cast<Eigen::Index>(bfs.size()));
    for (std::size_t n = 0; n < bfs.size(); ++n) {
        const double gain = bfs[n].radar_gain();
        if (!(gain > 0.0)) throw DegenerateGeometryError("radar gain is zero in some direction");
        c2[n] = std::sqrt(cfg.gamma_r * cfg.noise_rx_monitor / gain);
    }
    return c2;
}

AllocationTerms allocation_terms(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    AllocationTerms t;
    const auto n_dir = static_cast<Eigen::Index>(bfs.size());
    t.c1 = static_cast<double>(n_dir) * (std::norm(ch.h_sd) * cfg.p_s / cfg.gamma_s - cfg.noise_rx_d);
    t.c2_sq = radar_floor_amplitudes(cfg, bfs).array().square();
    t.g_jam.resize(n_dir);
    t.g_radar.resize(n_dir);
    for (Eigen::Index n = 0; n < n_dir; ++n) {
        t.g_jam[n] = bfs[n].gains.g_jam;
        t.g_radar[n] = bfs[n].gains.g_radar;
    }
    t.g_jam_max = n_dir > 0 ? t.g_jam.maxCoeff() : 0.0;
    t.support = jam_support(t.g_jam);
    return t;
}

namespace {

void check_monitoring(const SystemConfig& cfg, const ChannelSet& ch) {
    if (std::norm(ch.h_sd) * cfg.p_s <= cfg.noise_rx_d * cfg.gamma_s)
        throw MonitoringInfeasibleError("|h_sd|^2 p_s <= sigma^2 gamma_s: SINR_D stays below gamma_s without jamming");
}

// Jamming budget in gain units: sum_n p_jam,n^2 g_jam,n required for SINR_D = gamma_s.
double power_min_budget(const SystemConfig& cfg, const AllocationTerms& t) {
    return t.c1 / cfg.lambda_r - t.c2_sq.dot(t.g_radar);
}

PowerAllocation split_on_support(const AllocationTerms& t, double per_direction_sq, AllocationCase label) {
    PowerAllocation a;
    a.case_label = label;
    a.p_radar = t.c2_sq.cwiseSqrt();
    a.p_jam = rvec::Zero(t.c2_sq.size());
    for (int n : t.support) a.p_jam[n] = std::sqrt(per_direction_sq);
    a.jam_support = t.support;
    return a;
}

}  // namespace

PowerAllocation solve_power_min(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    check_monitoring(cfg, ch);
    const auto t = allocation_terms(cfg, ch, bfs);
    const double k = power_min_budget(cfg, t);
    if (k < 0.0) throw OverJammedError("radar probes alone push SINR_D below gamma_s");
    if (!(t.g_jam_max > 0.0)) throw DegenerateGeometryError("no direction can jam (g_jam = 0)");
    auto a = split_on_support(t, k / (static_cast<double>(t.support.size()) * t.g_jam_max), AllocationCase::PowerMin);
    a.p_th = cfg.lambda_r * (k / t.g_jam_max + t.c2_sq.sum());
    assemble_tx_vectors(a, bfs, cfg);
    return a;
}

double compute_p_th(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    check_monitoring(cfg, ch);
    const auto t = allocation_terms(cfg, ch, bfs);
    const double k = power_min_budget(cfg, t);
    if (k < 0.0) throw OverJammedError("radar probes alone push SINR_D below gamma_s");
    if (!(t.g_jam_max > 0.0)) throw DegenerateGeometryError("no direction can jam (g_jam = 0)");
    return cfg.lambda_r * (k / t.g_jam_max + t.c2_sq.sum());
}

PowerAllocation solve_jam_max(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    const auto t = allocation_terms(cfg, ch, bfs);
    const double b = cfg.p_max / cfg.lambda_r - t.c2_sq.sum();
    if (b < 0.0) throw RadarInfeasibleError("p_max cannot cover the radar probing floor");
    auto a = split_on_support(t, b / static_cast<double>(t.support.size()), AllocationCase::JamMax);
    a.p_th = std::numeric_limits<double>::quiet_NaN();
    assemble_tx_vectors(a, bfs, cfg);
    return a;
}

PowerAllocation algorithm1(const SystemConfig& cfg, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs) {
    check_monitoring(cfg, ch);
    PowerAllocation pm;
    try {
        pm = solve_power_min(cfg, ch, bfs);
    } catch (const OverJammedError&) {
        auto jm = solve_jam_max(cfg, ch, bfs);
        jm.gamma_s_violated = true;
        return jm;
    }
    if (cfg.p_max >= pm.p_th) return pm;
    auto jm = solve_jam_max(cfg, ch, bfs);
    jm.p_th = pm.p_th;
    return jm;
}

PowerAllocation radar_only_allocation(const SystemConfig& cfg, const std::vector<BeamformerSet>& bfs,
                                      bool fill_budget) {
    PowerAllocation a;
    a.case_label = AllocationCase::JamMax;
    a.p_th = std::numeric_limits<double>::quiet_NaN();
    a.p_radar = radar_floor_amplitudes(cfg, bfs);
    a.p_jam = rvec::Zero(a.p_radar.size());
    if (fill_budget) {
        const double floor_power = cfg.lambda_r * a.p_radar.squaredNorm();
        a.p_radar *= std::sqrt(cfg.p_max / floor_power);
    }
    assemble_tx_vectors(a, bfs, cfg);
    return a;
}

void assemble_tx_vectors(PowerAllocation& alloc, const std::vector<BeamformerSet>& bfs, const SystemConfig& cfg) {
    const cplx j(0.0, 1.0);
    alloc.p_nr.resize(bfs.size());
    alloc.p_nw.resize(bfs.size());
    for (std::size_t n = 0; n < bfs.size(); ++n) {
        const auto& b = bfs[n].bases;
        alloc.p_nr[n] = alloc.p_jam[n] * b.v_jam + (j * alloc.p_radar[n]) * b.v_radar;
        alloc.p_nw[n] = cvec::Zero(b.v_jam.size());
    }
    alloc.p_total = total_power(alloc, cfg);
}

}  // namespace survradar
