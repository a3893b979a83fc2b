#include <random>

#include "survradar/rng.hpp"
#include "survradar/verification.hpp"
#include "test_support.hpp"

using namespace survradar;
using survradar::test::rel_err;

namespace {

double uniform01(CounterRng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// Random squared amplitudes: radar at or above its floor, jamming split by
// random weights and scaled to deliver `jam_target` (gain units).
PowerAllocation random_allocation(const AllocationTerms& t, double jam_target, CounterRng& rng) {
    const Eigen::Index n = t.c2_sq.size();
    PowerAllocation a;
    a.p_radar.resize(n);
    a.p_jam.resize(n);
    rvec w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a.p_radar[i] = std::sqrt(t.c2_sq[i] * (1.0 + (uniform01(rng) < 0.5 ? 0.0 : uniform01(rng))));
        w[i] = uniform01(rng) < 0.3 ? 0.0 : uniform01(rng);
    }
    if (w.sum() == 0.0) w[0] = 1.0;
    const double rest = jam_target - a.p_radar.array().square().matrix().dot(t.g_radar);
    const double scale = rest / w.dot(t.g_jam);
    a.p_jam = (w * std::max(scale, 0.0)).array().sqrt();
    return a;
}

struct Fixture {
    SystemConfig cfg = survradar::test::small_config(16, 3);
    Scenario sc{cfg};
    survradar::test::Drawn d = survradar::test::draw_feasible(sc, 21);
    AllocationTerms t = allocation_terms(cfg, d.ch, d.bfs);
};

}  // namespace

TEST_SUITE("power_alloc") {

TEST_CASE("power-min closed form: radar at its floor, jamming equally over the strongest directions") {
    Fixture f;
    const auto a = solve_power_min(f.cfg, f.d.ch, f.d.bfs);
    CHECK(a.case_label == AllocationCase::PowerMin);
    CHECK(a.jam_support == f.t.support);
    const double budget = f.t.c1 / f.cfg.lambda_r - f.t.c2_sq.dot(f.t.g_radar);
    for (int n = 0; n < f.cfg.n_antennas; ++n) {
        CHECK(a.p_radar[n] * a.p_radar[n] == doctest::Approx(f.t.c2_sq[n]).epsilon(1e-12));
        const bool in_support = std::find(a.jam_support.begin(), a.jam_support.end(), n) != a.jam_support.end();
        const double expected = in_support ? budget / (f.t.support.size() * f.t.g_jam_max) : 0.0;
        CHECK(a.p_jam[n] * a.p_jam[n] == doctest::Approx(expected).epsilon(1e-12));
        CHECK(a.p_nw[n].norm() == 0.0);
    }
    CHECK(rel_err(a.p_total, total_power(a, f.cfg)) < 1e-12);
    CHECK(rel_err(a.p_th, a.p_total) < 1e-9);
    CHECK(rel_err(sinr_d(f.d.ch, f.d.bfs, a, f.cfg), f.cfg.gamma_s) < 1e-9);
}

TEST_CASE("jam-max closed form spends the whole budget") {
    Fixture f;
    f.cfg.p_max = 0.5 * compute_p_th(f.cfg, f.d.ch, f.d.bfs);
    const double floor_power = f.cfg.lambda_r * f.t.c2_sq.sum();
    REQUIRE(f.cfg.p_max > floor_power);
    const auto a = solve_jam_max(f.cfg, f.d.ch, f.d.bfs);
    CHECK(a.case_label == AllocationCase::JamMax);
    CHECK(rel_err(total_power(a, f.cfg), f.cfg.p_max) < 1e-12);
    const double budget = f.cfg.p_max / f.cfg.lambda_r - f.t.c2_sq.sum();
    for (int n : a.jam_support) CHECK(a.p_jam[n] * a.p_jam[n] == doctest::Approx(budget / a.jam_support.size()));
    CHECK(sinr_d(f.d.ch, f.d.bfs, a, f.cfg) > f.cfg.gamma_s);
}

TEST_CASE("threshold matches the power-min total and the case flips exactly there") {
    Fixture f;
    const double p_th = compute_p_th(f.cfg, f.d.ch, f.d.bfs);
    CHECK(rel_err(p_th, solve_power_min(f.cfg, f.d.ch, f.d.bfs).p_total) < 1e-9);
    f.cfg.p_max = p_th;
    const auto at = algorithm1(f.cfg, f.d.ch, f.d.bfs);
    f.cfg.p_max = std::nextafter(p_th, 0.0);
    const auto below = algorithm1(f.cfg, f.d.ch, f.d.bfs);
    CHECK(at.case_label == AllocationCase::PowerMin);
    CHECK(below.case_label == AllocationCase::JamMax);
    CHECK(rel_err(at.p_total, below.p_total) < 1e-9);
    CHECK(rel_err(below.p_th, p_th) < 1e-12);
}

TEST_CASE("closed forms beat random feasible allocations") {
    Fixture f;
    CounterRng rng(22);
    const double target = f.t.c1 / f.cfg.lambda_r;
    const auto pm = solve_power_min(f.cfg, f.d.ch, f.d.bfs);
    int tried = 0;
    for (int i = 0; i < 10000; ++i) {
        auto a = random_allocation(f.t, target, rng);
        assemble_tx_vectors(a, f.d.bfs, f.cfg);
        // Only allocations that meet SINR_D = gamma_s exactly are comparable.
        if (rel_err(sinr_d(f.d.ch, f.d.bfs, a, f.cfg), f.cfg.gamma_s) > 1e-9) continue;
        ++tried;
        if (a.p_total < pm.p_total * (1.0 - 1e-12)) FAIL("random allocation uses less power than the closed form");
    }
    CHECK(tried > 1000);

    f.cfg.p_max = 0.5 * pm.p_total;
    const auto jm = solve_jam_max(f.cfg, f.d.ch, f.d.bfs);
    const double jm_sinr = sinr_d(f.d.ch, f.d.bfs, jm, f.cfg);
    tried = 0;
    for (int i = 0; i < 10000; ++i) {
        auto a = random_allocation(f.t, target, rng);
        assemble_tx_vectors(a, f.d.bfs, f.cfg);
        // Rescale the jamming part onto the budget; skip draws whose radar part alone exceeds it.
        const double radar_power = f.cfg.lambda_r * a.p_radar.squaredNorm();
        const double jam_power = f.cfg.lambda_r * a.p_jam.squaredNorm();
        if (radar_power >= f.cfg.p_max || jam_power == 0.0) continue;
        a.p_jam *= std::sqrt((f.cfg.p_max - radar_power) / jam_power);
        assemble_tx_vectors(a, f.d.bfs, f.cfg);
        ++tried;
        if (sinr_d(f.d.ch, f.d.bfs, a, f.cfg) < jm_sinr * (1.0 - 1e-12)) FAIL("random allocation jams harder than the closed form");
    }
    CHECK(tried > 1000);
}

TEST_CASE("components outside the jamming and radar bases only cost power") {
    SystemConfig cfg = survradar::test::small_config(16, 4);
    const Scenario sc(cfg);
    CounterRng rng(23);
    std::normal_distribution<double> nd;
    int checked = 0;
    for (std::uint64_t start = 100; checked < 100; start += 7) {
        const auto d = survradar::test::draw_feasible(sc, start);
        const auto base = solve_power_min(cfg, d.ch, d.bfs);
        const auto rc = build_combiners(CombinerScheme::Optimal, d.bfs, base.p_nr, cfg.noise_rx_monitor);
        const int n = static_cast<int>(rng() % cfg.n_antennas);
        const auto& v = d.bfs[n].bases;
        // Random direction orthogonal to span{v_jam, v_radar}.
        cvec u(cfg.n_rf);
        for (auto& x : u) x = cplx(nd(rng), nd(rng));
        u -= v.v_jam * v.v_jam.dot(u) + v.v_radar * v.v_radar.dot(u);
        u.normalize();
        auto perturbed = base;
        perturbed.p_nr[n] += 0.1 * u;
        perturbed.p_total = total_power(perturbed, cfg);
        CHECK(perturbed.p_total > base.p_total);
        CHECK(rel_err(sinr_d(d.ch, d.bfs, perturbed, cfg), cfg.gamma_s) < 1e-9);
        CHECK(rel_err(sinr_r(rc, d.bfs, perturbed, cfg, n), cfg.gamma_r) < 1e-9);

        // Wait-interval power outside the jamming direction adds power and no jamming.
        auto waiting = base;
        cvec w = cvec::Zero(cfg.n_rf);
        for (int k = 0; k < cfg.n_rf - 1; ++k) w[k] = cplx(nd(rng), nd(rng));
        const cvec t = d.bfs[n].tx_jam.head(cfg.n_rf - 1);
        w.head(cfg.n_rf - 1) -= t * (t.dot(w.head(cfg.n_rf - 1)) / t.squaredNorm());
        waiting.p_nw[n] = 0.1 * w;
        CHECK(total_power(waiting, cfg) > base.p_total);
        CHECK(rel_err(sinr_d(d.ch, d.bfs, waiting, cfg), cfg.gamma_s) < 1e-9);
        ++checked;
    }
}

TEST_CASE("infeasible instances raise the documented errors") {
    Fixture f;
    SystemConfig quiet = f.cfg;
    quiet.p_s = 0.999 * f.cfg.noise_rx_d * f.cfg.gamma_s / std::norm(f.d.ch.h_sd);
    CHECK_THROWS_AS(solve_power_min(quiet, f.d.ch, f.d.bfs), MonitoringInfeasibleError);
    CHECK_THROWS_AS(algorithm1(quiet, f.d.ch, f.d.bfs), MonitoringInfeasibleError);

    SystemConfig poor = f.cfg;
    poor.p_max = 0.5 * f.cfg.lambda_r * f.t.c2_sq.sum();
    CHECK_THROWS_AS(solve_jam_max(poor, f.d.ch, f.d.bfs), RadarInfeasibleError);

    // Radar leakage alone above the jamming requirement: PowerMin is over-jammed.
    SystemConfig loud = f.cfg;
    const double leak = f.cfg.lambda_r * f.t.c2_sq.dot(f.t.g_radar) / f.cfg.n_antennas;
    loud.gamma_s = std::norm(f.d.ch.h_sd) * f.cfg.p_s / (f.cfg.noise_rx_d + 0.5 * leak);
    CHECK_THROWS_AS(solve_power_min(loud, f.d.ch, f.d.bfs), OverJammedError);
    const auto a = algorithm1(loud, f.d.ch, f.d.bfs);
    CHECK(a.case_label == AllocationCase::JamMax);
    CHECK(a.gamma_s_violated);
    CHECK(std::isnan(a.p_th));
}

TEST_CASE("radar-only fallback meets the radar floor or fills the budget") {
    Fixture f;
    const auto floor_only = radar_only_allocation(f.cfg, f.d.bfs, false);
    CHECK(floor_only.p_jam.norm() == 0.0);
    CHECK(rel_err(floor_only.p_total, f.cfg.lambda_r * f.t.c2_sq.sum()) < 1e-12);
    const auto filled = radar_only_allocation(f.cfg, f.d.bfs, true);
    CHECK(rel_err(filled.p_total, f.cfg.p_max) < 1e-12);
}

TEST_CASE("jamming support collects ties within relative tolerance") {
    rvec g(5);
    g << 1.0, 3.0, 3.0 * (1.0 - 1e-14), 2.0, 3.0 * (1.0 - 1e-6);
    CHECK(jam_support(g) == std::vector<int>{1, 2});
}

TEST_CASE("allocation checks hold at random sizes") {
    for (const auto& r : {check_threshold_identity(100, 24), check_case_switch(50, 25), check_binding_constraints(50, 26)}) {
        INFO(r.detail);
        CHECK(r.passed);
    }
}

}  // TEST_SUITE
