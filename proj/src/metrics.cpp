#include "survradar/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace survradar {

double sinr_e(const ReceiveCombiners& rc, const std::vector<BeamformerSet>& bfs, const PowerAllocation& alloc,
              const SystemConfig& cfg) {
    cplx signal = 0.0;
    double denom = 0.0;
    for (std::size_t n = 0; n < bfs.size(); ++n) {
        const cvec& w = rc.w_s[n];
        cvec wait = alloc.p_nw[n];
        wait[wait.size() - 1] = 0.0;  // Sigma
        signal += w.dot(bfs[n].rx_surveillance);
        denom += cfg.noise_rx_monitor * w.squaredNorm() +
                 cfg.lambda_r * std::norm(w.dot(bfs[n].radar_echo(alloc.p_nr[n]))) +
                 cfg.lambda_w * std::norm(w.dot(bfs[n].radar_echo(wait)));
    }
    denom *= static_cast<double>(bfs.size());
    if (!(denom > 0.0)) return 0.0;
    return cfg.p_s * std::norm(signal) / denom;
}

double sinr_d(const ChannelSet& ch, const std::vector<BeamformerSet>& bfs, const PowerAllocation& alloc,
              const SystemConfig& cfg) {
    double jam = 0.0;
    for (std::size_t n = 0; n < bfs.size(); ++n) {
        const cvec& t = bfs[n].tx_jam;  // U_n^H h_ed
        const Eigen::Index m = t.size();
        jam += cfg.lambda_r * std::norm(t.dot(alloc.p_nr[n])) +
               cfg.lambda_w * std::norm(t.head(m - 1).dot(alloc.p_nw[n].head(m - 1)));
    }
    const double n_dir = static_cast<double>(bfs.size());
    return n_dir * std::norm(ch.h_sd) * cfg.p_s / (jam + n_dir * cfg.noise_rx_d);
}

double sinr_r(const ReceiveCombiners& rc, const std::vector<BeamformerSet>& bfs, const PowerAllocation& alloc,
              const SystemConfig& cfg, int n) {
    const auto& bf = bfs.at(n);
    const cvec& w = rc.w_r[n];
    const double echo = std::norm(w.dot(bf.radar_echo(alloc.p_nr[n])));
    const double denom =
        cfg.noise_rx_monitor * w.squaredNorm() + cfg.p_s * std::norm(w.dot(bf.rx_surveillance));
    if (!(denom > 0.0)) return 0.0;
    return echo / denom;
}

double total_power(const PowerAllocation& alloc, const SystemConfig& cfg) {
    double total = 0.0;
    for (std::size_t n = 0; n < alloc.p_nr.size(); ++n) {
        const Eigen::Index m = alloc.p_nw[n].size();
        total += cfg.lambda_r * alloc.p_nr[n].squaredNorm() + cfg.lambda_w * alloc.p_nw[n].head(m - 1).squaredNorm();
    }
    return total;
}

TrialMetrics evaluate_metrics(const ReceiveCombiners& rc, const ChannelSet& ch, const std::vector<BeamformerSet>& bfs,
                              const PowerAllocation& alloc, const SystemConfig& cfg) {
    TrialMetrics m;
    m.sinr_e = sinr_e(rc, bfs, alloc, cfg);
    m.sinr_d = sinr_d(ch, bfs, alloc, cfg);
    m.sinr_r.resize(static_cast<Eigen::Index>(bfs.size()));
    for (std::size_t n = 0; n < bfs.size(); ++n) m.sinr_r[n] = sinr_r(rc, bfs, alloc, cfg, static_cast<int>(n));
    m.p_total = total_power(alloc, cfg);
    m.success = m.sinr_e >= m.sinr_d;
    m.gamma_s_violated = alloc.gamma_s_violated;
    return m;
}

rvec beampattern(const BeamformerSet& bf, const cvec& p, int samples, double spacing_ratio) {
    if (samples < 1) throw ConfigError("beampattern needs at least one sample");
    const cvec x = bf.U_tx * p;
    const int n_ant = static_cast<int>(x.size());
    rvec g(samples);
    for (int i = 0; i < samples; ++i) {
        const double s = -1.0 + 2.0 * i / samples;
        g[i] = std::norm(steering_vector_at(s, n_ant, spacing_ratio).dot(x));
    }
    return g;
}

rvec beampattern(const PowerAllocation& alloc, const std::vector<BeamformerSet>& bfs, int n, int samples,
                 double spacing_ratio) {
    return beampattern(bfs.at(n), alloc.p_nr.at(n), samples, spacing_ratio);
}

std::vector<int> dominant_lobes(const rvec& pattern, double threshold_db) {
    std::vector<int> lobes;
    const int len = static_cast<int>(pattern.size());
    if (len == 0) return lobes;
    const double peak = pattern.maxCoeff();
    if (!(peak > 0.0)) return lobes;
    const double floor = peak * db_to_linear(-threshold_db);
    for (int i = 0; i < len; ++i) {
        const double prev = pattern[(i + len - 1) % len];
        const double next = pattern[(i + 1) % len];
        if (pattern[i] > prev && pattern[i] >= next && pattern[i] >= floor) lobes.push_back(i);
    }
    return lobes;
}

double off_lobe_level_db(const rvec& pattern, const std::vector<int>& lobes, int guard) {
    const int len = static_cast<int>(pattern.size());
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < len; ++i) {
        bool near = false;
        for (int l : lobes) {
            const int d = std::abs(i - l);
            if (std::min(d, len - d) <= guard) near = true;
        }
        if (!near) {
            sum += pattern[i];
            ++count;
        }
    }
    if (count == 0 || !(pattern.maxCoeff() > 0.0)) return 0.0;
    return linear_to_db(sum / count / pattern.maxCoeff());
}

}  // namespace survradar
