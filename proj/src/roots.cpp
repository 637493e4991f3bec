#include "delaystab/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "delaystab/kernels.hpp"
#include "delaystab/lambertw.hpp"

namespace dstab {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr int kGaussN = 16;

void require_tau(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be a positive finite number");
}

struct GaussRule {
    std::array<double, kGaussN> x{};
    std::array<double, kGaussN> w{};
};

GaussRule make_gauss_rule() {
    GaussRule g;
    for (int i = 0; i < kGaussN; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (kGaussN + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= kGaussN; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = kGaussN * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        g.x[i] = x;
        g.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
}

const GaussRule& gauss() {
    static const GaussRule g = make_gauss_rule();
    return g;
}

// Integrates h'/h along straight segments, refining each until the
// 16-point estimate agrees with its two halves.
class ContourIntegrator {
public:
    ContourIntegrator(const CharParams& p, double tol, double perimeter)
        : c_{p.a.real(), p.a.imag(), p.w.real(), p.w.imag(), p.tau}, tol_(tol), perimeter_(perimeter) {}

    cplx segment(cplx z0, cplx z1) {
        edge0_ = z0;
        edge1_ = z1;
        seen_.clear();
        struct Item { cplx z0, z1; int depth; };
        std::vector<Item> stack{{z0, z1, 0}};
        cplx total = 0.0;
        while (!stack.empty()) {
            const Item it = stack.back();
            stack.pop_back();
            const cplx m = 0.5 * (it.z0 + it.z1);
            std::array<cplx, 3> est = three_estimates(it.z0, m, it.z1);
            const cplx halves = est[1] + est[2];
            const double allowed = tol_ * std::abs(it.z1 - it.z0) / perimeter_;
            if (std::abs(est[0] - halves) <= allowed) {
                total += halves;
                continue;
            }
            if (it.depth >= 40) throw NumericalError("count_roots_rect: quadrature did not converge");
            stack.push_back({it.z0, m, it.depth + 1});
            stack.push_back({m, it.z1, it.depth + 1});
        }
        return total;
    }

private:
    // Gauss estimates over [z0, z2], [z0, z1], [z1, z2] from one batch.
    std::array<cplx, 3> three_estimates(cplx z0, cplx z1, cplx z2) {
        const GaussRule& g = gauss();
        const std::array<std::pair<cplx, cplx>, 3> segs{{{z0, z2}, {z0, z1}, {z1, z2}}};
        constexpr std::size_t n = 3 * kGaussN;
        std::array<double, n> zr, zi, hr, hi, dr, di;
        for (std::size_t s = 0; s < 3; ++s) {
            const cplx mid = 0.5 * (segs[s].first + segs[s].second);
            const cplx half = 0.5 * (segs[s].second - segs[s].first);
            for (int j = 0; j < kGaussN; ++j) {
                const cplx z = mid + half * g.x[j];
                zr[s * kGaussN + j] = z.real();
                zi[s * kGaussN + j] = z.imag();
            }
        }
        kernels::char_eval(c_, zr, zi, hr, hi, dr, di);
        std::array<cplx, 3> out{};
        for (std::size_t s = 0; s < 3; ++s) {
            const cplx half = 0.5 * (segs[s].second - segs[s].first);
            cplx acc = 0.0;
            for (int j = 0; j < kGaussN; ++j) {
                const std::size_t k = s * kGaussN + j;
                const cplx h(hr[k], hi[k]);
                const cplx d(dr[k], di[k]);
                if (!std::isfinite(std::abs(h)) || !std::isfinite(std::abs(d))) {
                    throw NumericalError("count_roots_rect: overflow evaluating h on the contour");
                }
                if (std::abs(h) <= 1e-7 * std::abs(d)) {
                    throw RootOnContourError("count_roots_rect: a root lies within 1e-7 of the contour");
                }
                // A root exactly on the edge can hide between nodes: the principal
                // values of two such roots sum to an integer winding.
                const double step = std::abs(h / d);
                if (step < 2.0 * std::abs(half)) probe_root(cplx(zr[k], zi[k]), step);
                acc += g.w[j] * (d / h);
            }
            out[s] = acc * half;
        }
        return out;
    }

    // Newton from a node close to a root; rejects roots within 1e-7 of the current edge.
    void probe_root(cplx z, double step) {
        for (const cplx& r : seen_) {
            if (std::abs(z - r) <= 1.5 * step + 1e-12) return;
        }
        const CharParams p{cplx(c_.a_re, c_.a_im), cplx(c_.w_re, c_.w_im), c_.tau};
        for (int i = 0; i < 50; ++i) {
            const cplx d = char_derivative(p, z);
            if (d == 0.0) return;
            const cplx dz = char_value(p, z) / d;
            z -= dz;
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return;
            if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        const double scale = 1.0 + std::abs(z) + std::abs(p.a) + std::abs(p.w);
        if (!(std::abs(char_value(p, z)) <= 1e-12 * scale)) return;
        seen_.push_back(z);
        const cplx e = edge1_ - edge0_;
        const double t = std::clamp(((z - edge0_) * std::conj(e)).real() / std::norm(e), 0.0, 1.0);
        if (std::abs(z - (edge0_ + t * e)) <= 1e-7) {
            throw RootOnContourError("count_roots_rect: a root lies within 1e-7 of the contour");
        }
    }

    kernels::CharCoeffs c_;
    double tol_;
    double perimeter_;
    cplx edge0_, edge1_;
    std::vector<cplx> seen_;
};

}  // namespace

cplx char_value(const CharParams& p, cplx z) { return z + p.a - p.w * std::exp(-p.tau * z); }

cplx char_derivative(const CharParams& p, cplx z) { return 1.0 + p.tau * p.w * std::exp(-p.tau * z); }

cplx newton_refine(const CharParams& p, cplx z, int max_iter) {
    cplx best = z;
    double best_res = std::abs(char_value(p, z));
    for (int i = 0; i < max_iter && best_res > 0.0; ++i) {
        const cplx d = char_derivative(p, z);
        if (d == 0.0) break;
        z -= char_value(p, z) / d;
        const double r = std::abs(char_value(p, z));
        if (!(r < best_res)) break;
        best = z;
        best_res = r;
    }
    return best;
}

RootSet roots_right_of(const CharParams& p, double sigma_min) {
    require_tau(p.tau);
    RootSet out;
    if (p.w == 0.0) {
        const cplx z = -p.a;
        if (z.real() >= sigma_min) out.roots.push_back({z, 0, 0.0, false});
        return out;
    }
    const double tau = p.tau;
    const cplx zeta = tau * p.w * std::exp(tau * p.a);
    const double bound = std::abs(p.a) + std::abs(p.w) * std::exp(-tau * sigma_min);
    if (!std::isfinite(bound)) throw DomainError("roots_right_of: sigma_min too far left");
    const double lo = tau * (p.a.imag() - bound) / (2.0 * kPi);
    const double hi = tau * (p.a.imag() + bound) / (2.0 * kPi);
    if (hi - lo > 2.0e5) throw DomainError("roots_right_of: too many branches to enumerate");
    const int k_lo = static_cast<int>(std::floor(lo)) - 3;
    const int k_hi = static_cast<int>(std::ceil(hi)) + 3;

    const double tol = 1e-9 * std::max(1.0, std::abs(p.a) + std::abs(p.w));
    std::vector<RootEntry> found;
    for (int k = k_lo; k <= k_hi; ++k) {
        const cplx wk = wk_complex(k, zeta);
        cplx z = newton_refine(p, wk / tau - p.a);
        const double res = std::abs(char_value(p, z));
        if (res > tol + 1e-9 * std::abs(z)) {
            throw NumericalError("roots_right_of: residual bound not met on branch " + std::to_string(k));
        }
        if (z.real() >= sigma_min) found.push_back({z, k, res, false});
    }
    // Merge roots closer than 1e-8; sorting by Im z keeps this near-linear.
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return found[i].z.imag() < found[j].z.imag() || (found[i].z.imag() == found[j].z.imag() && i < j);
    });
    std::vector<long> merged_into(found.size(), -1);
    for (std::size_t oi = 1; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi; oj-- > 0;) {
            const std::size_t j = order[oj];
            if (found[i].z.imag() - found[j].z.imag() > 1e-8) break;
            if (merged_into[j] >= 0 || std::abs(found[i].z - found[j].z) > 1e-8) continue;
            merged_into[i] = static_cast<long>(j);
            break;
        }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (merged_into[i] < 0) continue;
        RootEntry& kept = found[static_cast<std::size_t>(merged_into[i])];
        kept.merged = true;
        if (found[i].residual < kept.residual) {
            kept.z = found[i].z;
            kept.residual = found[i].residual;
        }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (merged_into[i] < 0) out.roots.push_back(found[i]);
    }
    return out;
}

Rect right_half_rect(const CharParams& p) {
    const double b = std::abs(p.a) + std::abs(p.w) + 1.0;
    return {0.0, b, -b, b};
}

int count_roots_rect(const CharParams& p, const Rect& r) {
    require_tau(p.tau);
    if (!(r.re_lo < r.re_hi && r.im_lo < r.im_hi)) throw DomainError("count_roots_rect: degenerate rectangle");
    const cplx c0(r.re_lo, r.im_lo), c1(r.re_hi, r.im_lo), c2(r.re_hi, r.im_hi), c3(r.re_lo, r.im_hi);
    const double perimeter = 2.0 * ((r.re_hi - r.re_lo) + (r.im_hi - r.im_lo));
    double tol = 2.0 * kPi * 1e-4;
    for (int attempt = 0; attempt < 4; ++attempt, tol *= 0.1) {
        ContourIntegrator ci(p, tol, perimeter);
        const cplx total = ci.segment(c0, c1) + ci.segment(c1, c2) + ci.segment(c2, c3) + ci.segment(c3, c0);
        const double winding = total.imag() / (2.0 * kPi);
        const double rounded = std::round(winding);
        if (std::abs(winding - rounded) <= 0.25 && std::abs(total.real()) < 0.25 * 2.0 * kPi) {
            return static_cast<int>(rounded);
        }
    }
    throw NumericalError("count_roots_rect: winding number not close to an integer");
}

cplx crossing_derivative(cplx a, double omega0, double s0) {
    if (omega0 == 0.0 || !std::isfinite(omega0)) throw DomainError("crossing_derivative: omega0 must be nonzero");
    const cplx hprime = 1.0 + s0 * (cplx(0.0, omega0) + a);
    if (std::abs(hprime) < 1e-14) throw DomainError("crossing_derivative: h'(i omega0) = 0");
    const double u = omega0 + a.imag();
    const double v = 1.0 + s0 * a.real();
    const double den = v * v + (s0 * u) * (s0 * u);
    const double re = omega0 * u / den;
    const double im = -omega0 * (s0 * u * u + a.real() + s0 * a.real() * a.real()) / den;
    return {re, im};
}

cplx root_velocity(const CharParams& p, cplx z) {
    const cplx q = z + p.a;
    const cplx den = 1.0 + p.tau * q;
    if (den == 0.0) throw DomainError("root_velocity: double root");
    return -z * q / den;
}

cplx track_root(const CharParams& p, cplx z0, double tau_to, double step) {
    require_tau(p.tau);
    require_tau(tau_to);
    if (!(step > 0.0)) throw DomainError("track_root: step must be positive");
    CharParams q = p;
    cplx z = z0;
    double h = step;
    int guard = 0;
    while (q.tau != tau_to) {
        if (++guard > 1000000) throw NumericalError("track_root: too many steps");
        const double dir = tau_to > q.tau ? 1.0 : -1.0;
        const double dt = dir * std::min(h, std::abs(tau_to - q.tau));
        CharParams next = q;
        next.tau = std::abs(tau_to - q.tau) <= h ? tau_to : q.tau + dt;
        const cplx pred = z + (next.tau - q.tau) * root_velocity(q, z);
        cplx corr = pred;
        bool ok = false;
        for (int i = 0; i < 20; ++i) {
            const cplx d = char_derivative(next, corr);
            if (d == 0.0) break;
            const cplx delta = char_value(next, corr) / d;
            corr -= delta;
            if (std::abs(delta) <= 1e-14 * std::max(1.0, std::abs(corr))) {
                ok = true;
                break;
            }
        }
        if (!ok || std::abs(corr - pred) > 0.1 * std::max(1e-3, std::abs(z))) {
            h *= 0.5;
            if (h < 1e-14) throw NumericalError("track_root: continuation stalled");
            continue;
        }
        z = corr;
        q = next;
    }
    return z;
}

double envelope_tau_bound(cplx a, cplx w) {
    const double am = std::abs(a);
    const double wm = std::abs(w);
    if (wm == 0.0) throw DomainError("envelopes: w must be nonzero");
    if (am == 0.0) return 1.0 / (std::numbers::e * wm);
    return w0_real(am / (wm * std::numbers::e)) / am;
}

Envelope envelopes(cplx a, cplx w, double tau) {
    require_tau(tau);
    const double am = std::abs(a);
    const double wm = std::abs(w);
    if (wm == 0.0) throw DomainError("envelopes: w must be nonzero");
    const double x = tau * wm * std::exp(tau * am);
    if (!(x < 1.0 / std::numbers::e)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "envelopes: requires tau |w| e^{tau |a|} < 1/e, i.e. tau < " << envelope_tau_bound(a, w);
        throw DomainError(msg.str());
    }
    Envelope e;
    e.sigma0_plus = w0_real(tau * wm * std::exp(-tau * am)) / tau + am;
    e.sigma0_minus = w0_real(-x) / tau - am;
    e.sigma_minus1 = wm1_real(-x) / tau - am;
    return e;
}

}  // namespace dstab
