#include "survradar/model.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "survradar/rng.hpp"

namespace survradar {

DirectionGrid make_direction_grid(int n_directions) {
    if (n_directions < 1) throw ConfigError("direction grid needs at least one direction");
    DirectionGrid grid;
    grid.sin_values.resize(n_directions);
    grid.angles.resize(n_directions);
    for (int n = 0; n < n_directions; ++n) {
        const double s = -1.0 + 2.0 * n / n_directions;
        grid.sin_values[n] = s;
        grid.angles[n] = std::asin(s);
    }
    return grid;
}

cvec steering_vector_at(double sin_theta, int n_antennas, double spacing_ratio) {
    cvec a(n_antennas);
    const double phase = 2.0 * std::numbers::pi * spacing_ratio * sin_theta;
    for (int k = 0; k < n_antennas; ++k) {
        // Reduce the phase before the exponential so a sin grid value of zero gives exact ones.
        const double arg = std::remainder(phase * k, 2.0 * std::numbers::pi);
        a[k] = cplx(std::cos(arg), std::sin(arg));
    }
    return a;
}

cvec steering_vector(const DirectionGrid& grid, int n, const SystemConfig& cfg) {
    if (n < 0 || static_cast<std::size_t>(n) >= grid.size())
        throw std::out_of_range("direction index " + std::to_string(n) + " outside grid of " +
                                std::to_string(grid.size()));
    return steering_vector_at(grid.sin_values[n], cfg.n_antennas, cfg.antenna_spacing_ratio);
}

cmat dft_codebook(const DirectionGrid& grid, const SystemConfig& cfg) {
    const int n_dir = static_cast<int>(grid.size());
    cmat u(cfg.n_antennas, n_dir);
    for (int n = 0; n < n_dir; ++n) u.col(n) = steering_vector(grid, n, cfg);
    return u;
}

cmat probing_channel(const DirectionGrid& grid, int n, cplx beta_n, const SystemConfig& cfg) {
    const cvec a = steering_vector(grid, n, cfg);
    return beta_n * a * a.transpose();
}

double channel_calibration(int n_antennas, int n_rf) {
    const int n = n_antennas;
    // Expected sum of the k largest of n iid Exp(1) draws.
    auto top_sum = [n](int k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i)
            for (int j = i; j <= n; ++j) s += 1.0 / j;
        return s;
    };
    const int keep = n_rf - 1;
    const double e_keep = top_sum(keep);
    const double e_next = top_sum(std::min(n_rf, n));
    // Directions whose radar codeword is one of the top `keep` fall back to the next one.
    const double avg = ((n - keep) * e_keep + keep * e_next - e_keep) / n;
    return keep / (n * avg);
}

ChannelSet generate_channels(const SystemConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const int n = cfg.n_antennas;
    CounterRng rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);

    auto cn = [&](double variance) {
        const double s = std::sqrt(variance / 2.0);
        const double re = normal(rng);
        const double im = normal(rng);
        return cplx(s * re, s * im);
    };

    const double c = channel_calibration(cfg.n_antennas, cfg.n_rf);
    ChannelSet ch;
    ch.h_sd = cn(cfg.rho_sd);
    ch.h_se.resize(n);
    for (int k = 0; k < n; ++k) ch.h_se[k] = cn(cfg.rho_se * c);
    ch.h_ed.resize(n);
    for (int k = 0; k < n; ++k) ch.h_ed[k] = cn(cfg.rho_ed * c);
    ch.beta.resize(n);
    for (int k = 0; k < n; ++k) ch.beta[k] = std::polar(cfg.beta_magnitude, uniform(rng));
    return ch;
}

int conjugate_codeword_index(const DirectionGrid& grid, int n, double spacing_ratio) {
    // alpha(s) and alpha(s') coincide iff (d/lambda)(s - s') is an integer; conj(alpha(s)) = alpha(-s).
    const double target = -grid.sin_values.at(n);
    for (std::size_t m = 0; m < grid.size(); ++m) {
        const double shift = spacing_ratio * (grid.sin_values[m] - target);
        if (std::abs(shift - std::round(shift)) < 1e-9) return static_cast<int>(m);
    }
    return -1;
}

Scenario::Scenario(const SystemConfig& c) : cfg(c), grid(make_direction_grid(c.n_antennas)) {
    cfg.validate();
    codebook = dft_codebook(grid, cfg);
    conjugate_index.resize(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n)
        conjugate_index[n] = conjugate_codeword_index(grid, static_cast<int>(n), cfg.antenna_spacing_ratio);
}

}  // namespace survradar
