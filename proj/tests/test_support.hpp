#pragma once

#include <cmath>
#include <complex>

#include <doctest.h>

#include "survradar/analysis.hpp"
#include "survradar/experiments.hpp"

namespace survradar::test {

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

/// Desk configuration at a chosen size with everything else default.
inline SystemConfig small_config(int n, int m) {
    SystemConfig cfg = SystemConfig::desk_defaults();
    cfg.n_antennas = n;
    cfg.n_rf = m;
    cfg.p_max = 100.0 * n * cfg.noise_rx_d;
    return cfg;
}

/// Finds a seed whose channels give PowerMin-feasible beamformers.
struct Drawn {
    ChannelSet ch;
    std::vector<BeamformerSet> bfs;
};

inline Drawn draw_feasible(const Scenario& sc, std::uint64_t start) {
    for (std::uint64_t s = start; s < start + 1000; ++s) {
        Drawn d;
        d.ch = generate_channels(sc.cfg, s);
        try {
            d.bfs = build_beamformers(sc, d.ch);
            compute_p_th(sc.cfg, d.ch, d.bfs);
            return d;
        } catch (const Error&) {
        }
    }
    throw Error("no feasible draw");
}

}  // namespace survradar::test
