#include "delaystab/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "delaystab/errors.hpp"

namespace dstab {
namespace {

using cplx = std::complex<double>;

struct Mode {
    double amp, freq, phase;
};

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Decaying: return "Decaying";
        case Verdict::Growing: return "Growing";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

SimResult simulate(cplx a, cplx w, double tau, double horizon, const SimOptions& opts) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("simulate: tau must be positive");
    if (!(horizon >= 20.0 * tau) || !std::isfinite(horizon)) throw DomainError("simulate: horizon must be >= 20 tau");
    if (opts.steps_per_delay < 64) throw DomainError("simulate: step must be <= tau/64");

    const int m = opts.steps_per_delay;
    const double h = tau / m;
    const auto n_steps = static_cast<std::size_t>(std::ceil(horizon / h));

    // Grid values x_j and derivatives at t_j = (j - m) h, j = 0..m is the history.
    std::vector<cplx> x(n_steps + m + 1), dx(n_steps + m + 1);

    std::array<Mode, 3> modes{};
    if (opts.history == HistoryKind::Trigonometric) {
        std::mt19937_64 rng(opts.history_seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (auto& md : modes) {
            md = {0.5 + u(rng), 2.0 * std::numbers::pi * u(rng) / tau, 2.0 * std::numbers::pi * u(rng)};
        }
    }
    for (int j = 0; j <= m; ++j) {
        const double t = (j - m) * h;
        if (opts.history == HistoryKind::Constant) {
            x[j] = 1.0;
            dx[j] = 0.0;
        } else {
            double v = 0.0, dv = 0.0;
            for (const auto& md : modes) {
                v += md.amp * std::cos(md.freq * t + md.phase);
                dv -= md.amp * md.freq * std::sin(md.freq * t + md.phase);
            }
            x[j] = v;
            dx[j] = dv;
        }
    }

    // Delayed value at the midpoint of grid cell [j, j+1] (cubic Hermite).
    auto delayed_mid = [&](std::size_t j) {
        return 0.5 * (x[j] + x[j + 1]) + 0.125 * h * (dx[j] - dx[j + 1]);
    };
    auto f = [&](cplx xv, cplx xd) { return -a * xv + w * xd; };

    const double t_mid = 0.5 * horizon;
    double sup_mid = 0.0, sup_end = 0.0;
    auto record = [&](double t, cplx v) {
        const double mag = std::abs(v);
        if (t >= t_mid - tau - 1e-12 * horizon && t <= t_mid + 1e-12 * horizon) sup_mid = std::max(sup_mid, mag);
        if (t >= horizon - tau - 1e-12 * horizon) sup_end = std::max(sup_end, mag);
    };

    bool overflow = false;
    dx[m] = f(x[m], x[0]);
    for (std::size_t n = 0; n < n_steps; ++n) {
        const std::size_t j = n + m;  // current grid index
        const cplx xn = x[j];
        const cplx d0 = x[j - m];
        const cplx dmid = delayed_mid(j - m);
        const cplx d1 = x[j - m + 1];
        const cplx k1 = f(xn, d0);
        const cplx k2 = f(xn + 0.5 * h * k1, dmid);
        const cplx k3 = f(xn + 0.5 * h * k2, dmid);
        const cplx k4 = f(xn + h * k3, d1);
        const cplx xn1 = xn + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        x[j + 1] = xn1;
        dx[j + 1] = f(xn1, d1);
        const double t = static_cast<double>(n + 1) * h;
        if (!std::isfinite(std::abs(xn1)) || std::abs(xn1) > 1e300) {
            overflow = true;
            break;
        }
        record(t, xn1);
    }

    if (overflow) return {std::numeric_limits<double>::infinity(), Verdict::Growing};
    // t = H/2 - tau may fall before t = 0 when H < 2 tau; the precondition excludes that.
    if (sup_mid == 0.0) {
        return {sup_end == 0.0 ? 0.0 : std::numeric_limits<double>::infinity(),
                sup_end == 0.0 ? Verdict::Decaying : Verdict::Growing};
    }
    const double ratio = sup_end / sup_mid;
    const Verdict v = ratio < 0.9 ? Verdict::Decaying : (ratio > 1.1 ? Verdict::Growing : Verdict::Inconclusive);
    return {ratio, v};
}

}  // namespace dstab
