// Shared body of the SIMD kernel variants. The including file defines
// DSTAB_KERNEL_NS and compiles with the target flags of that variant.

#include <algorithm>
#include <array>
#include <cmath>
#include <experimental/simd>
#include <limits>
#include <numbers>

#include "kernel_impl.hpp"

namespace dstab::kernels::DSTAB_KERNEL_NS {
namespace {

namespace stdx = std::experimental;
using V = stdx::native_simd<double>;
constexpr std::size_t W = V::size();

// Loads lanes [i, i + W) or the padded tail.
V load(std::span<const double> x, std::size_t i, double pad) {
    if (i + W <= x.size()) return V(x.data() + i, stdx::element_aligned);
    std::array<double, W> buf;
    buf.fill(pad);
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(i), x.end(), buf.begin());
    return V(buf.data(), stdx::element_aligned);
}

void store(const V& v, std::span<double> out, std::size_t i) {
    if (i + W <= out.size()) {
        v.copy_to(out.data() + i, stdx::element_aligned);
        return;
    }
    std::array<double, W> buf;
    v.copy_to(buf.data(), stdx::element_aligned);
    std::copy(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(out.size() - i),
              out.begin() + static_cast<std::ptrdiff_t>(i));
}

// Lane-wise detail::acos_ratio.
V acos_ratio(const V& a, const V& rho) {
    const V x = a / rho;
    V r = stdx::acos(x);
    const auto hi = x > V(0.5);
    const auto lo = x < V(-0.5);
    if (stdx::any_of(hi)) stdx::where(hi, r) = V(2.0) * stdx::asin(stdx::sqrt((rho - a) / (V(2.0) * rho)));
    if (stdx::any_of(lo)) {
        stdx::where(lo, r) = V(std::numbers::pi) - V(2.0) * stdx::asin(stdx::sqrt((rho + a) / (V(2.0) * rho)));
    }
    return r;
}

}  // namespace

void stability_scan(std::span<const double> a, std::span<const double> rho, double psi, double tau,
                    std::span<std::uint8_t> stable, std::span<double> tau_c) {
    const V phi(std::abs(psi));
    const V cpsi(std::cos(psi));
    const V vtau(tau);
    const V nan(std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < a.size(); i += W) {
        const V ai = load(a, i, 0.0);
        const V ri = load(rho, i, 1.0);
        const V re_w = ri * cpsi;
        const V om = stdx::sqrt((ri - ai) * (ri + ai));
        const V alpha = acos_ratio(ai, ri);
        const auto in_cone = (-ri < ai) && (ai < ri);
        const auto st = ((ai >= ri) && (ai > re_w)) || (in_cone && (phi > alpha + vtau * om));
        V tc = nan;
        stdx::where((re_w < ai) && (ai < ri), tc) = (phi - alpha) / om;
        const std::size_t n = std::min(W, a.size() - i);
        for (std::size_t j = 0; j < n; ++j) stable[i + j] = st[j] ? 1 : 0;
        store(tc, tau_c, i);
    }
}

void char_eval(const CharCoeffs& c, std::span<const double> zr, std::span<const double> zi,
               std::span<double> hr, std::span<double> hi, std::span<double> dr, std::span<double> di) {
    const V tau(c.tau);
    const V wr(c.w_re), wi(c.w_im), ar(c.a_re), aim(c.a_im);
    for (std::size_t i = 0; i < zr.size(); i += W) {
        const V x = load(zr, i, 0.0);
        const V y = load(zi, i, 0.0);
        const V e = stdx::exp(-tau * x);
        const V ty = tau * y;
        const V ec = e * stdx::cos(ty);
        const V es = e * stdx::sin(ty);
        const V pr = wr * ec + wi * es;
        const V pi = wi * ec - wr * es;
        store(x + ar - pr, hr, i);
        store(y + aim - pi, hi, i);
        store(V(1.0) + tau * pr, dr, i);
        store(tau * pi, di, i);
    }
}

void dpartition_points(std::span<const double> t, double shift, double tau, std::span<double> a,
                       std::span<double> rho) {
    const V vshift(shift);
    const V vtau(tau);
    for (std::size_t i = 0; i < t.size(); i += W) {
        const V ti = load(t, i, 1.0);
        const V d = ti - vshift;
        const V s = stdx::sin(d);
        const V q = -(ti / vtau);
        store(q * stdx::cos(d) / s, a, i);
        store(q / s, rho, i);
    }
}

}  // namespace dstab::kernels::DSTAB_KERNEL_NS
