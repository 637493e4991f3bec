#include "delaystab/scalarfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "delaystab/errors.hpp"
#include "detail/bracket.hpp"

namespace dstab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-13;

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

void require_high_phi(double phi) {
    require(std::isfinite(phi) && phi > kPi / 2 && phi < kPi, "phi must lie in (pi/2, pi)");
}

// Right end of a bracket [left, phi - eps] on which C(.; phi) drops below r.
double right_bracket(double r, double phi, double left) {
    double eps = 0.5 * (phi - left);
    for (int i = 0; i < 1100; ++i) {
        const double t = phi - eps;
        if (t > left && big_c_phi(t, phi) < r) return t;
        eps *= 0.5;
    }
    throw NumericalError("no bracket found for inverse of C(.; phi)");
}

}  // namespace

double arccot(double x) {
    require(!std::isnan(x), "arccot: NaN input");
    return std::atan2(1.0, x);
}

double big_c(double theta) {
    require(theta > 0.0 && theta < kPi, "big_c: theta must lie in (0, pi)");
    if (theta < 1e-4) {
        const double t2 = theta * theta;
        return 1.0 - t2 / 3.0 - t2 * t2 / 45.0;
    }
    return theta * std::cos(theta) / std::sin(theta);
}

double big_c_inv(double r) {
    require(std::isfinite(r) && r < 1.0, "big_c_inv: r must be finite and < 1");
    // C decreases from 1 (theta -> 0) to -inf (theta -> pi).
    double hi = kPi;
    double eps = 0.5;
    while (big_c(kPi - eps) > r) {
        eps *= 0.5;
        if (eps < 1e-300) throw NumericalError("big_c_inv: r too negative");
    }
    hi = kPi - eps;
    double lo = 0.5;
    while (lo > 1e-300 && big_c(lo) < r) lo *= 0.5;
    if (lo <= 1e-300) throw NumericalError("big_c_inv: r too close to 1");
    return detail::solve_bracketed([r](double t) { return big_c(t) - r; }, lo, hi, kTol);
}

double big_r(double r) {
    const double theta = big_c_inv(r);
    return theta / std::sin(theta);
}

double big_c_phi(double theta, double phi) {
    require(std::isfinite(phi) && phi > 0.0 && phi < kPi, "big_c_phi: phi must lie in (0, pi)");
    require(theta >= 0.0 && theta < phi, "big_c_phi: theta must lie in [0, phi)");
    const double d = theta - phi;
    return theta * std::cos(d) / std::sin(d);
}

SplitPoint split_point(double phi) {
    require_high_phi(phi);
    auto f = [phi](double t) { return std::sin(2.0 * t - 2.0 * phi) - 2.0 * t; };
    // f(0) > 0 and f(phi - pi/2) = pi - 2 phi < 0.
    double lo = 0.0;
    double hi = phi - kPi / 2;
    while (hi - lo > kTol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) lo = mid; else hi = mid;
    }
    const double s = 0.5 * (lo + hi);
    const double c = std::cos(s - phi);
    return SplitPoint{phi, s, c * c};
}

double big_c_phi_inv(double r, double phi) {
    require(std::isfinite(phi) && phi > 0.0 && phi <= kPi / 2, "big_c_phi_inv: phi must lie in (0, pi/2]");
    require(std::isfinite(r) && r <= 0.0, "big_c_phi_inv: r must be <= 0");
    if (r == 0.0) return 0.0;
    const double hi = right_bracket(r, phi, 0.0);
    return detail::solve_bracketed([r, phi](double t) { return big_c_phi(t, phi) - r; }, 0.0, hi, kTol);
}

double big_c1_inv(double r, double phi) {
    const SplitPoint sp = split_point(phi);
    require(std::isfinite(r) && r >= 0.0 && r <= sp.m_phi * (1.0 + 1e-14), "big_c1_inv: r must lie in [0, M(phi)]");
    if (r == 0.0) return 0.0;
    if (r >= sp.m_phi) return sp.s_phi;
    return detail::solve_bracketed([r, phi](double t) { return big_c_phi(t, phi) - r; }, 0.0, sp.s_phi, kTol);
}

double big_c2_inv(double r, double phi) {
    const SplitPoint sp = split_point(phi);
    require(std::isfinite(r) && r <= sp.m_phi * (1.0 + 1e-14), "big_c2_inv: r must be <= M(phi)");
    if (r >= sp.m_phi) return sp.s_phi;
    const double hi = right_bracket(r, phi, sp.s_phi);
    return detail::solve_bracketed([r, phi](double t) { return big_c_phi(t, phi) - r; }, sp.s_phi, hi, kTol);
}

double big_r_phi(double r, double phi) {
    const double theta = big_c_phi_inv(r, phi);
    return -theta / std::sin(theta - phi);
}

double big_r1(double r, double phi) {
    const double theta = big_c1_inv(r, phi);
    return -theta / std::sin(theta - phi);
}

double big_r2(double r, double phi) {
    const double theta = big_c2_inv(r, phi);
    return -theta / std::sin(theta - phi);
}

}  // namespace dstab
