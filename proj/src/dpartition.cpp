#include "delaystab/dpartition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "delaystab/errors.hpp"
#include "delaystab/kernels.hpp"
#include "delaystab/scalarfun.hpp"

namespace dstab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMatchTol = 1e-9;

void require_tau(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be a positive finite number");
}

void require_psi(double psi) {
    if (!(psi > -kPi && psi <= kPi)) throw DomainError("psi must lie in (-pi, pi]");
}

CurveSample boundary_point(double t, double shift, double tau) {
    const double d = t - shift;
    const double s = std::sin(d);
    const double q = -(t / tau);
    return {t, q * std::cos(d) / s, q / s};
}

std::vector<CurveSample> sample_curve(const std::vector<double>& t, double shift, double tau, double param_scale) {
    std::vector<double> a(t.size()), rho(t.size());
    kernels::dpartition_points(t, shift, tau, a, rho);
    std::vector<CurveSample> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(rho[i] > 0.0)) throw NumericalError("boundary curve sample with non-positive rho");
        out[i] = {t[i] * param_scale, a[i], rho[i]};
    }
    return out;
}

int ladder_size_for(const CoefficientPoint& p, double tau, int n_max) {
    const double omega = angular_frequency(p);
    const int needed = static_cast<int>(std::ceil(tau * omega / (2.0 * kPi))) + 2;
    return std::max(n_max, needed);
}

}  // namespace

CurveLabel CurveLabel::Branch(int k) {
    if (k == 0) throw DomainError("branch label must be nonzero");
    return {false, k};
}

std::string CurveLabel::str() const { return critical ? std::string("c") : std::to_string(k); }

CurveLabel CurveLabel::parse(const std::string& s) {
    if (s == "c") return Critical();
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw DomainError("curve label must be 'c' or a nonzero integer: " + s);
    }
    if (used != s.size()) throw DomainError("curve label must be 'c' or a nonzero integer: " + s);
    return Branch(k);
}

CurveLabel to_curve_label(const LadderLabel& l) {
    switch (l.kind) {
        case CrossingKind::Critical: return CurveLabel::Critical();
        case CrossingKind::Plus: return CurveLabel::Branch(l.n);
        case CrossingKind::Minus: return CurveLabel::Branch(-l.n);
    }
    return CurveLabel::Critical();
}

std::vector<double> graded_grid(double lo, double hi, std::size_t n) {
    if (!(lo < hi)) throw DomainError("graded_grid: empty interval");
    if (n < 2) throw DomainError("graded_grid: need at least 2 samples");
    const double standoff = 1e-4 * (hi - lo);
    const double a = lo + standoff;
    const double b = hi - standoff;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(n - 1);
        out[i] = a + (b - a) * 0.5 * (1.0 - std::cos(kPi * u));
    }
    out.front() = a;
    out.back() = b;
    return out;
}

CurveSample hayes_point(double theta, double tau) {
    require_tau(tau);
    if (!(theta > 0.0 && theta < kPi)) throw DomainError("hayes_point: theta must lie in (0, pi)");
    const double s = std::sin(theta);
    return {theta, -theta * std::cos(theta) / (tau * s), theta / (tau * s)};
}

CurveSample sakata_point(double theta, double phi, double tau) {
    require_tau(tau);
    if (!(phi > 0.0 && phi < kPi)) throw DomainError("sakata_point: phi must lie in (0, pi)");
    if (!(theta > 0.0 && theta < phi)) throw DomainError("sakata_point: theta must lie in (0, phi)");
    return boundary_point(theta, phi, tau);
}

BoundaryCurve hayes_curve(double tau, std::size_t n_samples) {
    require_tau(tau);
    BoundaryCurve c;
    c.kind = CurveKind::Hayes;
    c.psi = kPi;
    c.tau = tau;
    c.samples = sample_curve(graded_grid(0.0, kPi, n_samples), kPi, tau, 1.0);
    return c;
}

BoundaryCurve sakata_curve(double phi, double tau, std::size_t n_samples) {
    require_tau(tau);
    if (!(phi > 0.0 && phi < kPi)) throw DomainError("sakata_curve: phi must lie in (0, pi)");
    BoundaryCurve c;
    c.kind = CurveKind::Sakata;
    c.psi = phi;
    c.tau = tau;
    c.samples = sample_curve(graded_grid(0.0, phi, n_samples), phi, tau, 1.0);
    if (phi > kPi / 2) {
        const SplitPoint sp = split_point(phi);
        const CurveSample fold = boundary_point(sp.s_phi, phi, tau);
        auto it = std::lower_bound(c.samples.begin(), c.samples.end(), sp.s_phi,
                                   [](const CurveSample& s, double t) { return s.param < t; });
        const auto idx = static_cast<std::size_t>(it - c.samples.begin());
        if (it != c.samples.end() && it->param == sp.s_phi) {
            *it = fold;
        } else {
            c.samples.insert(it, fold);
        }
        c.fold_index = idx;
    }
    return c;
}

FrequencyInterval interval_of(const CurveLabel& label, double psi) {
    require_psi(psi);
    if (label.critical) {
        if (psi == 0.0) throw DomainError("critical interval is empty for psi = 0");
        return psi > 0.0 ? FrequencyInterval{0.0, psi} : FrequencyInterval{psi, 0.0};
    }
    const double base = psi + 2.0 * kPi * label.k;
    if (label.k > 0) return {base - kPi, base};
    if (label.k < 0) return {base, base + kPi};
    throw DomainError("branch label must be nonzero");
}

BoundaryCurve gamma_curve(const CurveLabel& label, double psi, double tau, std::size_t n_samples) {
    require_tau(tau);
    const FrequencyInterval iv = interval_of(label, psi);
    BoundaryCurve c;
    c.kind = CurveKind::Gamma;
    c.label = label;
    c.psi = psi;
    c.tau = tau;
    c.samples = sample_curve(graded_grid(iv.lo, iv.hi, n_samples), psi, tau, 1.0 / tau);
    return c;
}

std::vector<CurveLabel> match_tau_labels(const CoefficientPoint& p, double tau, int n_max) {
    require_tau(tau);
    const TauLadder lad = tau_ladder(p, ladder_size_for(p, tau, n_max));
    std::vector<CurveLabel> out;
    for (const auto& e : lad.entries) {
        if (std::abs(e.tau - tau) <= kMatchTol * tau) {
            for (const auto& l : e.labels) out.push_back(to_curve_label(l));
        }
    }
    std::stable_partition(out.begin(), out.end(), [](const CurveLabel& l) { return l.critical; });
    return out;
}

std::optional<CurveLabel> match_tau_label(const CoefficientPoint& p, double tau, int n_max) {
    const auto all = match_tau_labels(p, tau, n_max);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<RayHit> ray_ordering(double psi, double tau, const CoefficientPoint& direction, int n_max) {
    require_tau(tau);
    require_psi(psi);
    if (!(std::abs(direction.a) < direction.rho())) throw DomainError("ray direction must satisfy |a| < |w|");
    const double dpsi = std::remainder(direction.psi() - psi, 2.0 * kPi);
    if (std::abs(dpsi) > 1e-12) throw DomainError("ray direction must have Arg(w) = psi");
    const TauLadder lad = tau_ladder(direction, n_max);
    std::vector<RayHit> out;
    out.reserve(lad.entries.size());
    for (const auto& e : lad.entries) {
        RayHit h{e.tau / tau, {}};
        for (const auto& l : e.labels) h.labels.push_back(to_curve_label(l));
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<bool> critical_region_scan(double psi, double tau, const std::vector<ScanPoint>& grid) {
    require_tau(tau);
    require_psi(psi);
    std::vector<double> a(grid.size()), rho(grid.size()), tc(grid.size());
    std::vector<std::uint8_t> st(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        a[i] = grid[i].a;
        rho[i] = grid[i].rho;
    }
    kernels::stability_scan(a, rho, psi, tau, st, tc);
    std::vector<bool> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = tc[i] > tau;
    return out;
}

}  // namespace dstab
