#include "delaystab/lambertw.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "delaystab/errors.hpp"

namespace dstab {
namespace {

using cplx = std::complex<double>;

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;
// 1/e split so that x + 1/e keeps its low-order bits near the branch point.
constexpr double kInvEHi = 0.36787944117144233;
constexpr double kInvELo = -1.2428753672788363e-17;
constexpr int kMaxIter = 100;

double offset_from_branch_point(double x) { return (x + kInvEHi) + kInvELo; }
cplx offset_from_branch_point(cplx z) { return (z + kInvEHi) + kInvELo; }

// W = -1 + p - p^2/3 + 11/72 p^3 - ... ; the sign of p selects the branch.
template <class T>
T branch_point_series(T p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
}

double halley_real(double x, double w) {
    for (int i = 0; i < kMaxIter; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) return w;
        const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if (denom == 0.0 || !std::isfinite(denom)) break;
        const double dw = f / denom;
        w -= dw;
        if (std::abs(dw) <= 4e-16 * (1.0 + std::abs(w))) return w;
    }
    return w;
}

void check_residual_real(double w, double x, const char* who) {
    const double res = std::abs(w * std::exp(w) - x);
    if (!(res <= 1e-13 * std::max(1.0, std::abs(x)))) {
        throw NumericalError(std::string(who) + ": residual bound not met");
    }
}

std::optional<cplx> halley_complex(cplx z, cplx w) {
    // Near the branch point the step stalls at rounding level; keep the best iterate.
    std::optional<cplx> best;
    double best_res = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kMaxIter; ++i) {
        const cplx ew = std::exp(w);
        const cplx f = w * ew - z;
        if (std::abs(f) < best_res) {
            best_res = std::abs(f);
            best = w;
        }
        const cplx wp1 = w + 1.0;
        if (wp1 == 0.0) return std::nullopt;
        const cplx denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if (denom == 0.0) return std::nullopt;
        const cplx dw = f / denom;
        if (!std::isfinite(dw.real()) || !std::isfinite(dw.imag())) return std::nullopt;
        w -= dw;
        if (std::abs(dw) <= 1e-15 * (1.0 + std::abs(w))) {
            // one extra step polishes the last bits
            const cplx ew2 = std::exp(w);
            const cplx f2 = w * ew2 - z;
            const cplx d2 = ew2 * (w + 1.0);
            if (d2 != 0.0) {
                const cplx cand = w - f2 / d2;
                if (std::abs(cand * std::exp(cand) - z) < std::abs(f2)) w = cand;
            }
            return w;
        }
    }
    return best;
}

// Rounding in w e^w grows like eps |w| |z| on high branches.
bool residual_ok(cplx w, cplx z) {
    const double tol = std::max(1e-12, 8.0 * std::numeric_limits<double>::epsilon() * std::abs(w));
    return std::abs(w * std::exp(w) - z) <= tol * std::max(1.0, std::abs(z));
}

cplx asymptotic_seed(int k, cplx z) {
    const cplx l1 = std::log(z) + cplx(0.0, 2.0 * kPi * k);
    const cplx l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
}

}  // namespace

double w0_real(double x) {
    if (std::isnan(x)) throw DomainError("w0_real: NaN input");
    const double off = offset_from_branch_point(x);
    if (off < -1e-15) throw DomainError("w0_real: x < -1/e");
    if (off <= 0.0) return -1.0;
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;

    double w;
    if (x < -0.25) {
        const double p = std::sqrt(2.0 * kE * off);
        w = branch_point_series(p);
        if (p < 1e-3) return w;
    } else if (x < 3.0) {
        const double l = std::log1p(x);
        w = l * (1.0 - std::log1p(l) / (2.0 + l));
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }
    w = halley_real(x, w);
    check_residual_real(w, x, "w0_real");
    return w;
}

double wm1_real(double x) {
    if (std::isnan(x)) throw DomainError("wm1_real: NaN input");
    const double off = offset_from_branch_point(x);
    if (off < -1e-15 || x >= 0.0) throw DomainError("wm1_real: x must lie in [-1/e, 0)");
    if (off <= 0.0) return -1.0;

    double w;
    if (x < -0.25) {
        const double p = std::sqrt(2.0 * kE * off);
        w = branch_point_series(-p);
        if (p < 1e-3) return w;
    } else {
        const double l1 = std::log(-x);
        const double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    w = halley_real(x, w);
    check_residual_real(w, x, "wm1_real");
    return w;
}

int lambert_branch_of(cplx w, cplx zeta) {
    const double lhs = (w + std::log(w)).imag();
    const double rhs = std::log(zeta).imag();
    return static_cast<int>(std::lround((lhs - rhs) / (2.0 * kPi)));
}

cplx wk_complex(int k, cplx zeta) {
    if (std::isnan(zeta.real()) || std::isnan(zeta.imag())) throw DomainError("wk_complex: NaN input");
    if (zeta.imag() == 0.0) zeta = cplx(zeta.real(), 0.0);  // -0 -> +0: upper-side limit on cuts
    if (zeta == 0.0) {
        if (k == 0) return 0.0;
        throw DomainError("wk_complex: zeta = 0 has no solution on branch k != 0");
    }

    const double x = zeta.real();
    if (zeta.imag() == 0.0) {
        const double off = offset_from_branch_point(x);
        if (k == 0 && off >= -1e-15) return w0_real(x);
        if (k == -1 && off >= -1e-15 && x < 0.0) return wm1_real(x);
    }

    const cplx off = offset_from_branch_point(zeta);
    const bool near_bp = std::abs(off) < 0.3;
    const cplx p = std::sqrt(2.0 * kE * off);

    std::array<cplx, 8> seeds{};
    int n = 0;
    auto push = [&](cplx s) { if (n < static_cast<int>(seeds.size())) seeds[n++] = s; };

    if (k == 0) {
        if (near_bp) push(branch_point_series(p));
        if (std::abs(zeta) < 0.5) push(zeta * (1.0 + zeta * (-1.0 + 1.5 * zeta)));
        if (std::abs(zeta) < 4.0) {
            const cplx l = std::log(1.0 + zeta);
            push(l * (1.0 - std::log(1.0 + l) / (2.0 + l)));
        }
        push(asymptotic_seed(0, zeta));
        push(cplx(0.5, 0.0));
    } else {
        if (near_bp && ((k == -1 && zeta.imag() >= 0.0) || (k == 1 && zeta.imag() < 0.0))) {
            push(branch_point_series(-p));
        }
        push(asymptotic_seed(k, zeta));
        const double side = k > 0 ? 1.0 : -1.0;
        push(cplx(-1.0, side * (2.0 * std::abs(k) - 0.5) * kPi));
        push(cplx(std::log(std::abs(zeta)) - 1.0, side * 2.0 * std::abs(k) * kPi));
    }
    push(asymptotic_seed(k, zeta) + cplx(0.0, 0.1));
    push(asymptotic_seed(k, zeta) - cplx(0.0, 0.1));

    for (int i = 0; i < n; ++i) {
        const auto w = halley_complex(zeta, seeds[i]);
        if (!w) continue;
        if (!residual_ok(*w, zeta)) continue;
        if (lambert_branch_of(*w, zeta) != k) continue;
        return *w;
    }
    throw NumericalError("wk_complex: Halley iteration did not converge on branch " + std::to_string(k));
}

}  // namespace dstab
