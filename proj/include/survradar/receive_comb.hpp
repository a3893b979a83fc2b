#pragma once

#include <string>
#include <vector>

#include "survradar/beam_select.hpp"

namespace survradar {

enum class CombinerScheme { Optimal, MRC, SurveillanceCentric };

std::string to_string(CombinerScheme s);

/// Receive combiners for all directions. The effective vectors act on U~_n^H y
/// (length M); the tilde vectors live in the null-space coordinates (length M-1)
/// and are empty where a scheme does not use a null-space projection.
struct ReceiveCombiners {
    CombinerScheme scheme = CombinerScheme::Optimal;
    std::vector<cvec> w_s_tilde;
    std::vector<cvec> w_r_tilde;
    std::vector<cvec> w_s;
    std::vector<cvec> w_r;

    /// w~_s stacked over directions, length (M-1)N. Empty for MRC.
    cvec stacked_w_s_tilde() const;
};

/// h~_n = Z_s^H U~_n^H h_se.
cvec projected_surveillance_channel(const BeamformerSet& bf);
/// h~_s, the stacked projections of every direction.
cvec stacked_surveillance_channel(const std::vector<BeamformerSet>& bfs);

/// w~_{s,n} = h~_n / sigma~^2 for every n. Throws DegenerateInputError when the
/// stacked projection h~_s vanishes.
std::vector<cvec> optimal_surveillance_combiner(const std::vector<BeamformerSet>& bfs, double sigma2_tilde);

/// w~_{r,n} = Z_r^H U~^H A_n U_n p_nr / sigma~^2.
cvec optimal_radar_combiner(const BeamformerSet& bf, const cvec& p_nr, double sigma2_tilde);

struct CombinerPair {
    cvec w_s;  // length M
    cvec w_r;  // length M
};

/// Matched filters without null-space projection, both unit norm. Throws
/// DegenerateInputError if either defining vector is zero.
CombinerPair mrc_combiners(const BeamformerSet& bf, const cvec& p_nr);

/// MRC surveillance side, null-space radar side (w_r = Z_r w~_r).
CombinerPair surveillance_centric_combiners(const BeamformerSet& bf, const cvec& p_nr, double sigma2_tilde);

/// Combiners of one scheme for all directions given the probe-interval transmit vectors.
ReceiveCombiners build_combiners(CombinerScheme scheme, const std::vector<BeamformerSet>& bfs,
                                 const std::vector<cvec>& p_nr, double sigma2_tilde);

}  // namespace survradar
