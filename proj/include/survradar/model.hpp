#pragma once

#include <cstdint>
#include <vector>

#include "survradar/config.hpp"
#include "survradar/types.hpp"

namespace survradar {

/// N probe directions with sin(theta_n) = -1 + 2n/N (0-based n).
struct DirectionGrid {
    std::vector<double> angles;      // radians
    std::vector<double> sin_values;  // strictly increasing, in [-1, 1)

    std::size_t size() const { return sin_values.size(); }
};

DirectionGrid make_direction_grid(int n_directions);

/// One channel realisation.
struct ChannelSet {
    cvec h_se;   // eavesdropping channel, length N
    cplx h_sd;   // suspicious link
    cvec h_ed;   // jamming channel, length N
    cvec beta;   // radar gain factor per direction, length N

    bool operator==(const ChannelSet& o) const {
        return h_sd == o.h_sd && h_se == o.h_se && h_ed == o.h_ed && beta == o.beta;
    }
};

/// Array response toward a given sin(theta): entry k is exp(j 2 pi (d/lambda) k sin(theta)).
/// Unnormalised, so the Euclidean norm is sqrt(N).
cvec steering_vector_at(double sin_theta, int n_antennas, double spacing_ratio);

/// Steering vector of grid direction n (0-based). Throws std::out_of_range.
cvec steering_vector(const DirectionGrid& grid, int n, const SystemConfig& cfg);

/// N x N codebook whose column n is steering_vector(grid, n).
cmat dft_codebook(const DirectionGrid& grid, const SystemConfig& cfg);

/// A_n = beta_n alpha(theta_n) alpha(theta_n)^T (plain transpose). Materialises
/// N x N; the pipeline itself only ever uses the rank-one factors.
cmat probing_channel(const DirectionGrid& grid, int n, cplx beta_n, const SystemConfig& cfg);

/// Per-entry variance multiplier c for h_se and h_ed: with entries CN(0, rho c)
/// the M-1 codeword projections selected by beam_select have mean power rho
/// (averaged over probe directions and over the overlap-exclusion rule).
double channel_calibration(int n_antennas, int n_rf);

ChannelSet generate_channels(const SystemConfig& cfg, std::uint64_t seed);

/// Index m with alpha(theta_m) == conj(alpha(theta_n)), or -1 when the grid has none.
int conjugate_codeword_index(const DirectionGrid& grid, int n, double spacing_ratio);

/// Precomputed, immutable per-configuration geometry shared by every trial.
struct Scenario {
    SystemConfig cfg;
    DirectionGrid grid;
    cmat codebook;
    /// conjugate_index[n] is the codeword equal to conj(alpha(theta_n)), or -1.
    std::vector<int> conjugate_index;

    explicit Scenario(const SystemConfig& c);
};

}  // namespace survradar
