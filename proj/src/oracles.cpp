#include "survradar/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace survradar {

OracleInstance make_oracle_instance(const SystemConfig& cfg, const ChannelSet& ch,
                                    const std::vector<BeamformerSet>& bfs) {
    OracleInstance inst;
    const auto n = static_cast<Eigen::Index>(bfs.size());
    inst.lambda_r = cfg.lambda_r;
    inst.lambda_w = cfg.lambda_w;
    inst.p_max = cfg.p_max;
    inst.c1 = static_cast<double>(n) * (std::norm(ch.h_sd) * cfg.p_s / cfg.gamma_s - cfg.noise_rx_d);
    inst.c2_sq.resize(n);
    inst.g_jam.resize(n);
    inst.g_radar.resize(n);
    inst.g_sum.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& bf = bfs[i];
        const double echo_gain = std::norm(bf.beta) * bf.gains.g_n * bf.tx_radar.squaredNorm();
        inst.c2_sq[i] = cfg.gamma_r * cfg.noise_rx_monitor / echo_gain;
        inst.g_jam[i] = bf.gains.g_jam;
        inst.g_radar[i] = bf.gains.g_radar;
        inst.g_sum[i] = bf.gains.g_sum;
    }
    return inst;
}

namespace {

// Euclidean projection onto {x : a.x = r, x >= lower} with a >= 0.
rvec project(const rvec& y, const rvec& a, const rvec& lower, double r) {
    auto at = [&](double tau) {
        rvec x(y.size());
        for (Eigen::Index i = 0; i < y.size(); ++i) x[i] = std::max(lower[i], y[i] - tau * a[i]);
        return x;
    };
    if (a.dot(lower) > r * (1.0 + 1e-12)) throw OracleFailure("oracle instance is infeasible");
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (a[i] > 0.0) hi = std::max(hi, (y[i] - lower[i]) / a[i]);
    if (!std::isfinite(hi)) throw OracleFailure("oracle equality has no positive coefficient");
    double width = 1.0;
    double lo = hi - width;
    while (a.dot(at(lo)) < r) {
        width *= 2.0;
        lo = hi - width;
        if (!std::isfinite(lo)) throw OracleFailure("projection bracket diverged");
    }
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (a.dot(at(mid)) >= r ? lo : hi) = mid;
    }
    // Exact multiplier for the free set identified by the bisection.
    const double tau0 = 0.5 * (lo + hi);
    double num = -r;
    double den = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (y[i] - tau0 * a[i] > lower[i]) {
            num += a[i] * y[i];
            den += a[i] * a[i];
        } else {
            num += a[i] * lower[i];
        }
    }
    if (den > 0.0) {
        const double tau = num / den;
        rvec x(y.size());
        for (Eigen::Index i = 0; i < y.size(); ++i)
            x[i] = y[i] - tau0 * a[i] > lower[i] ? std::max(lower[i], y[i] - tau * a[i]) : lower[i];
        return x;
    }
    return at(tau0);
}

}  // namespace

double oracle_objective(OracleProblem problem, const OracleInstance& inst, const rvec& x_jam, const rvec& x_radar) {
    if (problem == OracleProblem::PowerMin) return inst.lambda_r * (x_jam.sum() + x_radar.sum());
    return inst.lambda_r * (x_jam.dot(inst.g_jam) + x_radar.dot(inst.g_radar));
}

double oracle_kkt_residual(OracleProblem problem, const OracleInstance& inst, const rvec& x_jam, const rvec& x_radar) {
    const Eigen::Index n = x_jam.size();
    const double g_max = inst.g_jam.maxCoeff();
    const double scale = std::max(x_radar.maxCoeff(), x_jam.maxCoeff());
    // Dual of the equality, from the jamming variables that are strictly positive.
    double inv_g = 0.0;
    int active = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (x_jam[i] > 1e-9 * scale) {
            inv_g += 1.0 / inst.g_jam[i];
            ++active;
        }
    }
    const double price = active > 0 ? static_cast<double>(active) / inv_g : g_max;  // gain per unit power

    double res = 0.0;
    if (problem == OracleProblem::PowerMin) {
        const double target = inst.c1 / inst.lambda_r;
        res = std::max(res, std::abs(x_jam.dot(inst.g_jam) + x_radar.dot(inst.g_radar) - target) /
                                std::max(std::abs(target), 1e-300));
    } else {
        const double target = inst.p_max / inst.lambda_r;
        res = std::max(res, std::abs(x_jam.sum() + x_radar.sum() - target) / target);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        // Multipliers normalised by the equality price: mu1 for x_jam >= 0, mu4 for x_radar >= C_2^2.
        const double mu1 = 1.0 - inst.g_jam[i] / price;
        const double mu4 = 1.0 - inst.g_radar[i] / price;
        res = std::max(res, std::max(0.0, -mu1));
        res = std::max(res, std::max(0.0, -mu4));
        res = std::max(res, std::max(0.0, -x_jam[i]) / scale);
        res = std::max(res, std::max(0.0, inst.c2_sq[i] - x_radar[i]) / scale);
        res = std::max(res, std::abs(mu1 * x_jam[i]) / scale);
        res = std::max(res, std::abs(mu4 * (x_radar[i] - inst.c2_sq[i])) / scale);
    }
    return res;
}

OracleResult convex_oracle(OracleProblem problem, const OracleInstance& inst) {
    const Eigen::Index n = static_cast<Eigen::Index>(inst.size());
    const double g_max = inst.g_jam.maxCoeff();
    if (!(g_max > 0.0)) throw OracleFailure("no jamming gain in oracle instance");

    // Variables stacked as [x_jam; x_radar].
    rvec a(2 * n), lower(2 * n), cost(2 * n);
    double r = 0.0;
    double scale = inst.c2_sq.maxCoeff();
    constexpr double kTie = 1e-8;
    double cost_unit = 1.0;
    if (problem == OracleProblem::PowerMin) {
        r = inst.c1 / inst.lambda_r;
        a << inst.g_jam, inst.g_radar;
        cost << rvec::Ones(n), rvec::Constant(n, 1.0 + kTie);
        scale = std::max(scale, r / g_max);
    } else {
        r = inst.p_max / inst.lambda_r;
        a = rvec::Ones(2 * n);
        cost << -inst.g_jam, -(inst.g_radar.array() - kTie * g_max).matrix();
        cost_unit = g_max;
        scale = std::max(scale, r);
    }
    lower << rvec::Zero(n), inst.c2_sq;
    if (!(r > 0.0)) throw OracleFailure("oracle instance has a nonpositive right-hand side");

    // Tikhonov weight on the jamming block picks the equal split among tied directions;
    // the step makes one gradient step exact on that quadratic.
    const double eps = kTie * cost_unit / scale;
    const double step = 1.0 / eps;

    auto gradient = [&](const rvec& x) {
        rvec g = cost;
        g.head(n) += eps * x.head(n);
        return g;
    };

    OracleResult out;
    rvec x = project(lower, a, lower, r);
    const double tol = 1e-7 * scale;
    int it = 0;
    for (; it < 1000000; ++it) {
        const rvec next = project(x - step * gradient(x), a, lower, r);
        const double diff = (next - x).cwiseAbs().maxCoeff();
        x = next;
        if (diff <= tol) break;
    }
    if (it >= 1000000) throw OracleFailure("projected gradient did not converge");
    // The long steps cancel against values ~1/eps larger than x, leaving the equality
    // off by ~1e-6. Snap variables at their bounds and rescale the interior ones.
    {
        double fixed = 0.0, interior = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            if (x[i] <= lower[i] + 1e-9 * scale) {
                x[i] = lower[i];
                fixed += a[i] * lower[i];
            } else {
                interior += a[i] * x[i];
            }
        }
        if (interior > 0.0) {
            const double factor = (r - fixed) / interior;
            for (Eigen::Index i = 0; i < x.size(); ++i)
                if (x[i] > lower[i]) x[i] = std::max(lower[i], x[i] * factor);
        }
    }
    out.iterations = it + 1;
    out.x_jam = x.head(n);
    out.x_radar = x.tail(n);
    out.objective = oracle_objective(problem, inst, out.x_jam, out.x_radar);
    out.kkt_residual = oracle_kkt_residual(problem, inst, out.x_jam, out.x_radar);
    return out;
}

WaitIntervalResult wait_interval_oracle(const OracleInstance& inst) {
    const Eigen::Index n = static_cast<Eigen::Index>(inst.size());
    rvec a(n), b(n), c(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a[i] = std::sqrt(inst.g_radar[i] / inst.g_sum[i]);
        b[i] = std::sqrt(inst.g_jam[i] / inst.g_sum[i]);
        c[i] = std::sqrt(inst.c2_sq[i]);
        if (!(b[i] > 0.0) || !(a[i] > 0.0)) throw OracleFailure("wait-interval oracle needs positive gains");
    }
    const double g_sum_max = inst.g_sum.maxCoeff();

    // For a multiplier mu <= 0 on the jamming requirement the per-direction minimiser of
    // x + phi(x) + mu g_sum x, phi(x) = (max(0, C - a sqrt x) / b)^2, is closed form.
    auto x_sum_at = [&](double mu) {
        rvec x(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double denom = 1.0 + (a[i] * a[i]) / (b[i] * b[i]) + mu * inst.g_sum[i];
            const double shift = a[i] * c[i] / (b[i] * b[i]);
            x[i] = std::pow(shift / denom, 2);
        }
        return x;
    };
    auto phi = [&](Eigen::Index i, double x) { return std::pow(std::max(0.0, c[i] - a[i] * std::sqrt(x)) / b[i], 2); };
    const double target = inst.c1 / inst.lambda_r;
    auto excess = [&](double mu) { return x_sum_at(mu).dot(inst.g_sum) - target; };

    const double mu_floor = -1.0 / g_sum_max;
    double mu = mu_floor;
    rvec x_sum;
    if (excess(mu_floor) < 0.0) {
        // Even with the best direction at its kink the jamming requirement is unmet: the
        // multiplier sits at its floor and the strongest directions carry the remainder past
        // the kink, where the radar constraint is already met by the jamming beam alone.
        x_sum = x_sum_at(mu_floor);
        std::vector<Eigen::Index> top;
        for (Eigen::Index i = 0; i < n; ++i)
            if (inst.g_sum[i] >= g_sum_max * (1.0 - 1e-12)) top.push_back(i);
        const double extra = (target - x_sum.dot(inst.g_sum)) / (g_sum_max * static_cast<double>(top.size()));
        for (Eigen::Index i : top) x_sum[i] += extra;
    } else if (excess(0.0) >= 0.0) {
        // The jamming requirement is slack at the unconstrained optimum.
        mu = 0.0;
        x_sum = x_sum_at(mu);
    } else {
        double lo = mu_floor;
        double hi = 0.0;
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (excess(mid) > 0.0 ? lo : hi) = mid;
        }
        mu = 0.5 * (lo + hi);
        x_sum = x_sum_at(mu);
    }

    WaitIntervalResult out;
    out.x_sum = x_sum;
    out.x_new.resize(n);
    out.x_wait = rvec::Zero(n);
    out.wait_price_margin = std::numeric_limits<double>::infinity();
    const double gap = (x_sum.dot(inst.g_sum) - target) / std::abs(target);
    double res = std::max(0.0, -gap);
    if (mu < 0.0) res = std::max(res, std::abs(gap));
    for (Eigen::Index i = 0; i < n; ++i) {
        out.x_new[i] = phi(i, out.x_sum[i]);
        // Stationarity in x_sum: 1 + phi'(x) + mu g_sum, where phi'(x) = a^2/b^2 - a C / (b^2 sqrt x) below the kink.
        const double sx = std::sqrt(out.x_sum[i]);
        const double dphi = c[i] - a[i] * sx > 0.0 ? (a[i] * a[i] - a[i] * c[i] / sx) / (b[i] * b[i]) : 0.0;
        res = std::max(res, std::abs(1.0 + dphi + mu * inst.g_sum[i]));
        // Wait-interval jamming: price lambda_w (1 + mu g_jam) must be nonnegative; x_wait = 0 is then optimal.
        const double margin = 1.0 + mu * inst.g_jam[i];
        out.wait_price_margin = std::min(out.wait_price_margin, margin);
        res = std::max(res, std::max(0.0, -margin));
    }
    out.objective = inst.lambda_r * (out.x_sum.sum() + out.x_new.sum()) + inst.lambda_w * out.x_wait.sum();
    out.kkt_residual = res;
    return out;
}

}  // namespace survradar
