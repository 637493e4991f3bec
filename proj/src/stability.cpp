#include "delaystab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "delaystab/errors.hpp"
#include "delaystab/scalarfun.hpp"
#include "detail/acos_ratio.hpp"

namespace dstab {
namespace {

constexpr double kPi = std::numbers::pi;

void require_tau(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be a positive finite number");
}

// sqrt(rho^2 - a^2) without cancellation when |a| is close to rho.
double omega_of(double a, double rho) { return std::sqrt((rho - a) * (rho + a)); }

// |x| reduced to [0, pi] after wrapping x into (-pi, pi]; equals arccos(cos x).
double wrapped_abs(double x) { return std::abs(std::remainder(x, 2.0 * kPi)); }

}  // namespace

double principal_arg(std::complex<double> w) {
    const double t = std::arg(w);
    return t <= -kPi ? kPi : t;
}

double CoefficientPoint::psi() const { return principal_arg(w); }

std::string_view region_tag(RegionClass r) {
    switch (r) {
        case RegionClass::DelayIndependentStable: return "I";
        case RegionClass::DelayDependent: return "II";
        case RegionClass::DelayIndependentUnstable: return "III";
    }
    return "?";
}

bool window_contains(const DelayWindow& win, double tau) {
    if (std::holds_alternative<AllPositive>(win)) return tau > 0.0;
    if (std::holds_alternative<EmptyWindow>(win)) return false;
    return tau > 0.0 && tau < std::get<UpTo>(win).tau_c;
}

RegionClass classify(const CoefficientPoint& p) {
    if (p.w == 0.0) {
        return p.a > 0.0 ? RegionClass::DelayIndependentStable : RegionClass::DelayIndependentUnstable;
    }
    if (p.a <= p.w.real()) return RegionClass::DelayIndependentUnstable;
    if (p.a >= p.rho()) return RegionClass::DelayIndependentStable;
    return RegionClass::DelayDependent;
}

CriticalDelayForms critical_delay_forms(const CoefficientPoint& p) {
    if (classify(p) != RegionClass::DelayDependent) {
        throw DomainError("critical delay requires Re(w) < a < |w|");
    }
    const double rho = p.rho();
    const double omega = omega_of(p.a, rho);
    const double phi = std::abs(p.psi());
    return CriticalDelayForms{(phi - detail::acos_ratio(p.a, rho)) / omega, (phi - arccot(p.a / omega)) / omega};
}

double critical_delay(const CoefficientPoint& p) {
    const CriticalDelayForms f = critical_delay_forms(p);
    if (std::abs(f.arccos_form - f.arccot_form) > 1e-11 * std::max(1.0, std::abs(f.arccot_form))) {
        throw NumericalError("critical delay: arccos and arccot forms disagree");
    }
    return f.arccos_form;
}

double matsunaga_delay(double b, double theta, double a) {
    if (b == 0.0 || !std::isfinite(b)) throw DomainError("matsunaga_delay: b must be nonzero");
    if (!(theta >= -kPi / 2 && theta <= kPi / 2)) throw DomainError("matsunaga_delay: theta must lie in [-pi/2, pi/2]");
    if (!(b * b > a * a)) throw DomainError("matsunaga_delay: requires b^2 > a^2");
    const double sgn = b > 0.0 ? 1.0 : -1.0;
    const double ab = std::abs(b);
    return sgn / omega_of(a, ab) * (detail::acos_ratio(-a * (b > 0.0 ? 1.0 : -1.0), ab) - std::abs(theta));
}

MatsunagaParams matsunaga_params(std::complex<double> w) {
    if (w == 0.0) throw DomainError("matsunaga_params: w must be nonzero");
    const double t = principal_arg(-w);
    if (std::abs(t) <= kPi / 2) return {std::abs(w), t};
    return {-std::abs(w), principal_arg(w)};
}

DelayWindow delay_window(const CoefficientPoint& p) {
    switch (classify(p)) {
        case RegionClass::DelayIndependentStable: return AllPositive{};
        case RegionClass::DelayIndependentUnstable: return EmptyWindow{};
        case RegionClass::DelayDependent: break;
    }
    return UpTo{critical_delay(p)};
}

double angular_frequency(const CoefficientPoint& p) {
    const double rho = p.rho();
    if (!(std::abs(p.a) < rho)) throw DomainError("angular frequency requires |a| < |w|");
    return omega_of(p.a, rho);
}

TauLadder tau_ladder(const CoefficientPoint& p, int n_max) {
    if (n_max < 1) throw DomainError("tau_ladder: n_max must be >= 1");
    const double omega = angular_frequency(p);
    const double psi = p.psi();
    const double alpha = detail::acos_ratio(p.a, p.rho());
    auto plus = [&](int n) { return (psi - alpha + 2.0 * kPi * n) / omega; };
    auto minus = [&](int n) { return (-psi - alpha + 2.0 * kPi * n) / omega; };

    TauLadder out;
    const bool in_dc = classify(p) == RegionClass::DelayDependent;
    const double crit_omega = psi > 0.0 ? omega : -omega;

    if (psi == kPi) {
        // tau_c = tau_1^- and tau_n^+ = tau_{n+1}^-.
        out.entries.push_back({critical_delay(p), {{CrossingKind::Critical, 0, crit_omega}, {CrossingKind::Minus, 1, -omega}}});
        for (int n = 1; n <= n_max; ++n) {
            out.entries.push_back({plus(n), {{CrossingKind::Plus, n, omega}, {CrossingKind::Minus, n + 1, -omega}}});
        }
        return out;
    }
    if (psi == 0.0) {
        for (int n = 1; n <= n_max; ++n) {
            out.entries.push_back({plus(n), {{CrossingKind::Plus, n, omega}, {CrossingKind::Minus, n, -omega}}});
        }
        return out;
    }

    std::vector<LadderEntry> raw;
    if (in_dc) raw.push_back({critical_delay(p), {{CrossingKind::Critical, 0, crit_omega}}});
    for (int n = 1; n <= n_max; ++n) {
        raw.push_back({plus(n), {{CrossingKind::Plus, n, omega}}});
        raw.push_back({minus(n), {{CrossingKind::Minus, n, -omega}}});
    }
    std::stable_sort(raw.begin(), raw.end(), [](const LadderEntry& x, const LadderEntry& y) { return x.tau < y.tau; });
    for (auto& e : raw) {
        if (!out.entries.empty() && e.tau - out.entries.back().tau <= 1e-15 * e.tau) {
            auto& labels = out.entries.back().labels;
            labels.insert(labels.end(), e.labels.begin(), e.labels.end());
        } else {
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

bool is_stable(double a, std::complex<double> w, double tau) {
    require_tau(tau);
    const double rho = std::abs(w);
    if (a >= rho && a != w) return true;
    if (-rho < a && a < rho) {
        const double phi = std::abs(principal_arg(w));
        return phi > detail::acos_ratio(a, rho) + tau * omega_of(a, rho);
    }
    return false;
}

bool is_stable_complex(std::complex<double> a, std::complex<double> w, double tau) {
    require_tau(tau);
    const double rho = std::abs(w);
    const double ar = a.real();
    if (rho == 0.0) return ar > 0.0;
    if (ar > rho) return true;
    if (-rho < ar && ar <= rho) {
        const double lhs = wrapped_abs(tau * a.imag() + principal_arg(w));
        return lhs > detail::acos_ratio(ar, rho) + tau * omega_of(ar, rho);
    }
    return false;
}

bool lambert_halfplane_test(std::complex<double> zeta, double sigma) {
    const double m = std::abs(zeta);
    const double s = sigma * std::exp(sigma);
    if (m == 0.0) return sigma > 0.0;
    if (s > m) return true;
    if (-m < s && s <= m) {
        const double q = m * std::exp(-sigma);
        const double root = std::sqrt(std::max(0.0, (q - sigma) * (q + sigma)));
        return std::abs(principal_arg(zeta)) > detail::acos_ratio(s, m) + root;
    }
    return false;
}

bool lambert_halfplane_test_real(double zeta, double sigma) {
    if (!(sigma > -1.0)) return false;
    const double es = std::exp(sigma);
    return -big_r(-sigma) * es < zeta && zeta < sigma * es;
}

bool hayes_region_test(double a, double w, double tau) {
    require_tau(tau);
    const double r = -tau * a;
    if (!(r < 1.0)) return false;
    return -big_r(r) / tau < w && w < a;
}

bool sakata_region_test(double a, std::complex<double> w, double tau) {
    require_tau(tau);
    if (w.imag() == 0.0) throw DomainError("sakata_region_test: w must be off the real axis");
    const double phi = std::abs(principal_arg(w));
    const double rho = std::abs(w);
    const double r = -tau * a;
    if (phi <= kPi / 2) {
        return a > 0.0 && rho < big_r_phi(r, phi) / tau;
    }
    if (a >= 0.0) return rho < big_r2(r, phi) / tau;
    const SplitPoint sp = split_point(phi);
    if (!(r < sp.m_phi)) return false;
    return big_r1(r, phi) / tau < rho && rho < big_r2(r, phi) / tau;
}

bool region_test(double a, std::complex<double> w, double tau) {
    if (w.imag() == 0.0) return hayes_region_test(a, w.real(), tau);
    return sakata_region_test(a, w, tau);
}

double region_slack(const CoefficientPoint& p) {
    if (p.w == 0.0) return std::abs(p.a);
    return std::min(std::abs(p.a - p.rho()), std::abs(p.a - p.w.real()));
}

double ladder_distance(const CoefficientPoint& p, double tau, int n_max) {
    const double rho = p.rho();
    if (!(std::abs(p.a) < rho)) return std::numeric_limits<double>::infinity();
    const double omega = omega_of(p.a, rho);
    const int needed = static_cast<int>(std::ceil(tau * omega / (2.0 * kPi))) + 2;
    const TauLadder lad = tau_ladder(p, std::max(n_max, needed));
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : lad.entries) best = std::min(best, std::abs(e.tau - tau));
    return best;
}

}  // namespace dstab
