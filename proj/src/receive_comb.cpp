#include "survradar/receive_comb.hpp"

namespace survradar {

std::string to_string(CombinerScheme s) {
    switch (s) {
        case CombinerScheme::Optimal: return "Optimal";
        case CombinerScheme::MRC: return "MRC";
        case CombinerScheme::SurveillanceCentric: return "SurveillanceCentric";
    }
    return "?";
}

cvec ReceiveCombiners::stacked_w_s_tilde() const {
    if (w_s_tilde.empty()) return {};
    const Eigen::Index m1 = w_s_tilde.front().size();
    cvec out(m1 * static_cast<Eigen::Index>(w_s_tilde.size()));
    for (std::size_t n = 0; n < w_s_tilde.size(); ++n) out.segment(n * m1, m1) = w_s_tilde[n];
    return out;
}

cvec projected_surveillance_channel(const BeamformerSet& bf) { return bf.Z_s.adjoint() * bf.rx_surveillance; }

cvec stacked_surveillance_channel(const std::vector<BeamformerSet>& bfs) {
    if (bfs.empty()) return {};
    const Eigen::Index m1 = bfs.front().Z_s.cols();
    cvec out(m1 * static_cast<Eigen::Index>(bfs.size()));
    for (std::size_t n = 0; n < bfs.size(); ++n) out.segment(n * m1, m1) = projected_surveillance_channel(bfs[n]);
    return out;
}

std::vector<cvec> optimal_surveillance_combiner(const std::vector<BeamformerSet>& bfs, double sigma2_tilde) {
    std::vector<cvec> out;
    out.reserve(bfs.size());
    double energy = 0.0;
    for (const auto& bf : bfs) {
        out.push_back(projected_surveillance_channel(bf) / sigma2_tilde);
        energy += out.back().squaredNorm();
    }
    if (!(energy > 0.0)) throw DegenerateInputError("surveillance channel is entirely nulled by Z_s");
    return out;
}

cvec optimal_radar_combiner(const BeamformerSet& bf, const cvec& p_nr, double sigma2_tilde) {
    const cplx radar_amplitude = bf.tx_radar.transpose() * p_nr;
    cvec w = bf.Z_r.adjoint() * bf.radar_echo(p_nr) / sigma2_tilde;
    if (std::abs(radar_amplitude) > 1e-12 * p_nr.norm() * std::sqrt(bf.radar_tx_norm2) && !(w.norm() > 0.0))
        throw Error("radar combiner vanished although the probe carries radar power");
    return w;
}

CombinerPair mrc_combiners(const BeamformerSet& bf, const cvec& p_nr) {
    const cvec echo = bf.radar_echo(p_nr);
    if (!(bf.rx_surveillance.norm() > 0.0) || !(echo.norm() > 0.0))
        throw DegenerateInputError("MRC combiner defined by a zero vector");
    return {bf.rx_surveillance.normalized(), echo.normalized()};
}

CombinerPair surveillance_centric_combiners(const BeamformerSet& bf, const cvec& p_nr, double sigma2_tilde) {
    if (!(bf.rx_surveillance.norm() > 0.0)) throw DegenerateInputError("MRC combiner defined by a zero vector");
    return {bf.rx_surveillance.normalized(), bf.Z_r * optimal_radar_combiner(bf, p_nr, sigma2_tilde)};
}

ReceiveCombiners build_combiners(CombinerScheme scheme, const std::vector<BeamformerSet>& bfs,
                                 const std::vector<cvec>& p_nr, double sigma2_tilde) {
    if (p_nr.size() != bfs.size()) throw ConfigError("transmit vector count does not match direction count");
    ReceiveCombiners rc;
    rc.scheme = scheme;
    const std::size_t n_dir = bfs.size();
    rc.w_s.resize(n_dir);
    rc.w_r.resize(n_dir);
    switch (scheme) {
        case CombinerScheme::Optimal: {
            rc.w_s_tilde = optimal_surveillance_combiner(bfs, sigma2_tilde);
            rc.w_r_tilde.resize(n_dir);
            for (std::size_t n = 0; n < n_dir; ++n) {
                rc.w_r_tilde[n] = optimal_radar_combiner(bfs[n], p_nr[n], sigma2_tilde);
                rc.w_s[n] = bfs[n].Z_s * rc.w_s_tilde[n];
                rc.w_r[n] = bfs[n].Z_r * rc.w_r_tilde[n];
            }
            break;
        }
        case CombinerScheme::MRC:
            for (std::size_t n = 0; n < n_dir; ++n) {
                auto pair = mrc_combiners(bfs[n], p_nr[n]);
                rc.w_s[n] = std::move(pair.w_s);
                rc.w_r[n] = std::move(pair.w_r);
            }
            break;
        case CombinerScheme::SurveillanceCentric:
            rc.w_r_tilde.resize(n_dir);
            for (std::size_t n = 0; n < n_dir; ++n) {
                if (!(bfs[n].rx_surveillance.norm() > 0.0))
                    throw DegenerateInputError("MRC combiner defined by a zero vector");
                rc.w_s[n] = bfs[n].rx_surveillance.normalized();
                rc.w_r_tilde[n] = optimal_radar_combiner(bfs[n], p_nr[n], sigma2_tilde);
                rc.w_r[n] = bfs[n].Z_r * rc.w_r_tilde[n];
            }
            break;
    }
    return rc;
}

}  // namespace survradar
