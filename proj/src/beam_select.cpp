#include "survradar/beam_select.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace survradar {

CodewordRanking rank_codewords(const cmat& codebook, const cvec& h) {
    CodewordRanking r;
    r.correlation = codebook.adjoint() * h;
    r.order.resize(r.correlation.size());
    std::iota(r.order.begin(), r.order.end(), 0);
    std::vector<double> mag(r.correlation.size());
    for (Eigen::Index k = 0; k < r.correlation.size(); ++k) mag[k] = std::abs(r.correlation[k]);
    std::stable_sort(r.order.begin(), r.order.end(), [&](int a, int b) { return mag[a] > mag[b]; });
    return r;
}

std::vector<int> pick_codewords(const CodewordRanking& ranking, int excluded, int count) {
    std::vector<int> picked;
    picked.reserve(count);
    for (int idx : ranking.order) {
        if (static_cast<int>(picked.size()) == count) break;
        if (idx != excluded) picked.push_back(idx);
    }
    return picked;
}

namespace {

int matching_column(const cmat& codebook, const cvec& target) {
    const double tol = 1e-9 * std::sqrt(static_cast<double>(codebook.rows()));
    for (Eigen::Index k = 0; k < codebook.cols(); ++k)
        if ((codebook.col(k) - target).norm() < tol) return static_cast<int>(k);
    return -1;
}

cmat assemble(const cmat& codebook, const std::vector<int>& picked, const cvec& last) {
    cmat u(codebook.rows(), static_cast<Eigen::Index>(picked.size()) + 1);
    for (std::size_t i = 0; i < picked.size(); ++i) u.col(i) = codebook.col(picked[i]);
    u.col(picked.size()) = last;
    return u;
}

}  // namespace

cmat select_tx_codewords(const cmat& codebook, const cvec& h_ed, int n, int n_rf) {
    const cvec radar = codebook.col(n).conjugate();
    const auto ranking = rank_codewords(codebook, h_ed);
    return assemble(codebook, pick_codewords(ranking, matching_column(codebook, radar), n_rf - 1), radar);
}

cmat select_rx_codewords(const cmat& codebook, const cvec& h_se, int n, int n_rf) {
    const auto ranking = rank_codewords(codebook, h_se);
    return assemble(codebook, pick_codewords(ranking, n, n_rf - 1), codebook.col(n));
}

cmat null_space_rank1(const cvec& v) {
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw DegenerateInputError("null space of a zero (or non-finite) vector is undefined");
    const Eigen::Index m = v.size();
    const cvec u = v / norm;
    // Householder reflector H with H u = -e^{j phi} e_0; H is invariant to the phase of v.
    const cplx phase = std::abs(u[0]) > 0.0 ? u[0] / std::abs(u[0]) : cplx(1.0, 0.0);
    cvec w = u;
    w[0] += phase;
    const cmat h = cmat::Identity(m, m) - (2.0 / w.squaredNorm()) * (w * w.adjoint());
    cmat z = h.rightCols(m - 1);
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
        for (Eigen::Index r = 0; r < m; ++r) {
            const double mag = std::abs(z(r, c));
            if (mag > 1e-12) {
                z.col(c) *= std::conj(z(r, c)) / mag;  // first nonzero entry real positive
                break;
            }
        }
    }
    return z;
}

cmat null_space_rank1(const cmat& b) {
    Eigen::JacobiSVD<cmat> svd(b);
    const auto& s = svd.singularValues();
    if (!(s[0] > 0.0) || !std::isfinite(s[0]))
        throw DegenerateInputError("null space of a zero matrix is not rank-one");
    if (s.size() > 1 && s[1] > 1e-6 * s[0])
        throw DegenerateInputError("matrix is not rank one");
    Eigen::Index best = 0;
    b.colwise().norm().maxCoeff(&best);
    return null_space_rank1(cvec(b.col(best)));
}

ChannelGains compute_gains(const cmat& U_tx, const cmat& U_rx, const cmat& Z_r, const cvec& h_ed,
                           const cvec& alpha) {
    const Eigen::Index m = U_tx.cols();
    ChannelGains g;
    g.g_n = (Z_r.adjoint() * (U_rx.adjoint() * alpha)).squaredNorm();
    if (!(g.g_n > 1e-12))
        throw DegenerateGeometryError("radar combining gain g_n vanished; the probe direction is nulled");
    const cvec jam = U_tx.adjoint() * h_ed;
    g.g_sum = jam.squaredNorm();
    g.g_radar = std::norm(alpha.cwiseProduct(h_ed).sum());
    g.g_jam = jam.head(m - 1).squaredNorm();
    return g;
}

DirectionBases direction_bases(const cmat& U_tx, const cvec& h_ed, const cvec& alpha) {
    const Eigen::Index m = U_tx.cols();
    const cvec sum = U_tx.adjoint() * h_ed;
    const cvec radar = U_tx.adjoint() * alpha.conjugate();
    cvec jam = sum;
    jam[m - 1] = 0.0;  // Sigma
    if (!(sum.norm() > 0.0) || !(radar.norm() > 0.0) || !(jam.norm() > 0.0))
        throw DegenerateGeometryError("direction basis defining vector is zero");

    DirectionBases b;
    b.v_sum = sum.normalized();
    b.v_jam = jam.normalized();
    b.v_radar = radar.normalized();
    const cplx overlap = b.v_radar.dot(b.v_sum);  // v_radar^H v_sum
    if (std::abs(overlap) > 0.0) b.v_radar *= overlap / std::abs(overlap);

    const double g_sum = sum.squaredNorm();
    const double g_jam = jam.squaredNorm();
    const double g_radar = std::norm(sum[m - 1]);
    b.v_new = -std::sqrt(g_radar / g_jam) * b.v_sum + std::sqrt(g_sum / g_jam) * b.v_radar;
    return b;
}

BeamformerSet build_beamformer(const Scenario& sc, const ChannelSet& ch, const CodewordRanking& ed_rank,
                               const CodewordRanking& se_rank, int n) {
    const int m = sc.cfg.n_rf;
    BeamformerSet bf;
    bf.direction = n;
    bf.beta = ch.beta[n];
    const cvec alpha = sc.codebook.col(n);

    bf.tx_codewords = pick_codewords(ed_rank, sc.conjugate_index[n], m - 1);
    bf.rx_codewords = pick_codewords(se_rank, n, m - 1);
    bf.U_tx = assemble(sc.codebook, bf.tx_codewords, alpha.conjugate());
    bf.U_rx = assemble(sc.codebook, bf.rx_codewords, alpha);

    bf.rx_surveillance = bf.U_rx.adjoint() * ch.h_se;
    bf.rx_radar = bf.U_rx.adjoint() * alpha;
    bf.tx_radar = bf.U_tx.transpose() * alpha;
    bf.tx_jam = bf.U_tx.adjoint() * ch.h_ed;
    bf.radar_tx_norm2 = bf.tx_radar.squaredNorm();  // ||U^H conj(alpha)|| = ||U^T alpha||

    bf.Z_s = null_space_rank1(cmat(bf.rx_radar * bf.tx_radar.transpose()));
    bf.Z_r = null_space_rank1(bf.rx_surveillance);
    bf.gains = compute_gains(bf.U_tx, bf.U_rx, bf.Z_r, ch.h_ed, alpha);
    bf.bases = direction_bases(bf.U_tx, ch.h_ed, alpha);
    return bf;
}

std::vector<BeamformerSet> build_beamformers(const Scenario& sc, const ChannelSet& ch) {
    const auto ed_rank = rank_codewords(sc.codebook, ch.h_ed);
    const auto se_rank = rank_codewords(sc.codebook, ch.h_se);
    std::vector<BeamformerSet> out;
    out.reserve(sc.grid.size());
    for (std::size_t n = 0; n < sc.grid.size(); ++n)
        out.push_back(build_beamformer(sc, ch, ed_rank, se_rank, static_cast<int>(n)));
    return out;
}

}  // namespace survradar
