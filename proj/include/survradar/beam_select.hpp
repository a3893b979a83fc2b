#pragma once

#include <vector>

#include "survradar/model.hpp"
#include "survradar/types.hpp"

namespace survradar {

/// Codebook indices ordered by decreasing |codeword^H h|; ties go to the lower index.
struct CodewordRanking {
    cvec correlation;        // U^H h over the whole codebook
    std::vector<int> order;
};

CodewordRanking rank_codewords(const cmat& codebook, const cvec& h);

/// First `count` entries of the ranking, skipping `excluded` (pass -1 to skip nothing).
std::vector<int> pick_codewords(const CodewordRanking& ranking, int excluded, int count);

/// Transmit analog beamformer U_n: the M-1 best jamming codewords followed by
/// conj(alpha(theta_n)). A jamming codeword equal to that last column is skipped.
cmat select_tx_codewords(const cmat& codebook, const cvec& h_ed, int n, int n_rf);
/// Receive analog beamformer: the M-1 best eavesdropping codewords followed by
/// alpha(theta_n), skipping codeword n itself.
cmat select_rx_codewords(const cmat& codebook, const cvec& h_se, int n, int n_rf);

/// Orthonormal basis (M x (M-1)) of the orthogonal complement of a nonzero vector.
/// Householder completion; deterministic for a given input.
cmat null_space_rank1(const cvec& v);
/// Same for the column space of a rank-one M x M matrix, so that Z^H B = 0.
cmat null_space_rank1(const cmat& b);

struct DirectionBases {
    cvec v_sum;
    cvec v_radar;  // phase-aligned so that <v_sum, v_radar> is real and nonnegative
    cvec v_jam;
    cvec v_new;
};

struct ChannelGains {
    double g_n = 0.0;      // radar combining gain alpha^H U~ Z_r Z_r^H U~^H alpha
    double g_sum = 0.0;    // ||U_n^H h_ed||^2
    double g_radar = 0.0;  // |alpha^T h_ed|^2
    double g_jam = 0.0;    // ||Sigma U_n^H h_ed||^2
};

/// Everything the power allocation and the metrics need about one probe direction.
struct BeamformerSet {
    int direction = 0;
    std::vector<int> tx_codewords;  // M-1 jamming codeword indices
    std::vector<int> rx_codewords;  // M-1 eavesdropping codeword indices
    cmat U_tx;                      // N x M
    cmat U_rx;                      // N x M
    cmat Z_s;                       // M x (M-1)
    cmat Z_r;                       // M x (M-1)
    cplx beta;
    cvec rx_surveillance;  // U~^H h_se
    cvec rx_radar;         // U~^H alpha(theta_n)
    cvec tx_radar;         // U^T alpha(theta_n); alpha^T U p = tx_radar^T p
    cvec tx_jam;           // U^H h_ed
    ChannelGains gains;
    /// ||U^H conj(alpha)||^2, the norm the radar amplitude picks up through U_n.
    double radar_tx_norm2 = 0.0;
    DirectionBases bases;

    /// Gain multiplying p_radar^2 in ||Z_r^H U~^H A_n U_n p||^2.
    double radar_gain() const { return std::norm(beta) * gains.g_n * radar_tx_norm2; }
    /// U~^H A_n U_n p as the rank-one product beta (U~^H alpha)(alpha^T U p).
    cvec radar_echo(const cvec& p) const { return beta * rx_radar * tx_radar.transpose() * p; }
};

/// Gains per their defining formulas. Throws DegenerateGeometryError when
/// g_n <= 1e-12 (the radar direction is fully suppressed by Z_r).
ChannelGains compute_gains(const cmat& U_tx, const cmat& U_rx, const cmat& Z_r, const cvec& h_ed,
                           const cvec& alpha);

/// Normalised direction bases. Throws DegenerateGeometryError if a defining
/// vector vanishes.
DirectionBases direction_bases(const cmat& U_tx, const cvec& h_ed, const cvec& alpha);

/// Builds the beamformer set for every direction of the scenario.
std::vector<BeamformerSet> build_beamformers(const Scenario& sc, const ChannelSet& ch);

/// Builds one direction given precomputed codeword rankings.
BeamformerSet build_beamformer(const Scenario& sc, const ChannelSet& ch, const CodewordRanking& ed_rank,
                               const CodewordRanking& se_rank, int n);

}  // namespace survradar
