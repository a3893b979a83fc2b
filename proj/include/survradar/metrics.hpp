#pragma once

#include <vector>

#include "survradar/power_alloc.hpp"
#include "survradar/receive_comb.hpp"

namespace survradar {

struct TrialMetrics {
    double sinr_e = 0.0;
    double sinr_d = 0.0;
    rvec sinr_r;
    double p_total = 0.0;
    bool success = false;
    bool gamma_s_violated = false;
};

/// Scan-averaged eavesdropping SINR of the stacked combiner:
///   p_s |sum_n w_n^H a_n|^2 / (N sum_n (sigma~^2 ||w_n||^2 + lambda_r |w_n^H e_n|^2 + lambda_w |w_n^H e_w,n|^2))
/// with a_n = U~_n^H h_se and e_n, e_w,n the radar echoes of the probe and wait
/// vectors. With the optimal combiner the echo terms vanish and this equals
/// p_s ||h~_s||^2 / (N sigma~^2).
double sinr_e(const ReceiveCombiners& rc, const std::vector<BeamformerSet>& bfs, const PowerAllocation& alloc,
              const SystemConfig& cfg);

/// SINR at the suspicious receiver averaged over one scan period.
double sinr_d(const ChannelSet& ch, const std::vector<BeamformerSet>& bfs, const PowerAllocation& alloc,
              const SystemConfig& cfg);

/// Radar SINR of direction n, including the residual suspicious signal.
double sinr_r(const ReceiveCombiners& rc, const std::vector<BeamformerSet>& bfs, const PowerAllocation& alloc,
              const SystemConfig& cfg, int n);

double total_power(const PowerAllocation& alloc, const SystemConfig& cfg);

TrialMetrics evaluate_metrics(const ReceiveCombiners& rc, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs,
                              const PowerAllocation& alloc, const SystemConfig& cfg);

/// |alpha(theta)^H U_n p|^2 on the uniform grid sin(theta_i) = -1 + 2i/samples.
rvec beampattern(const BeamformerSet& bf, const cvec& p, int samples, double spacing_ratio);
rvec beampattern(const PowerAllocation& alloc, const std::vector<BeamformerSet>& bfs, int n, int samples,
                 double spacing_ratio);

/// Indices of the dominant lobes: local maxima of the (periodic) pattern within
/// `threshold_db` of the global maximum.
std::vector<int> dominant_lobes(const rvec& pattern, double threshold_db = 10.0);

/// Mean gain away from the dominant lobes relative to the peak, in dB. Samples
/// closer than `guard` samples to a lobe are excluded.
double off_lobe_level_db(const rvec& pattern, const std::vector<int>& lobes, int guard);

}  // namespace survradar
