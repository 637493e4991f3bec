#include <cmath>
#include <limits>

#include "../detail/acos_ratio.hpp"
#include "kernel_impl.hpp"

namespace dstab::kernels::scalar {

void stability_scan(std::span<const double> a, std::span<const double> rho, double psi, double tau,
                    std::span<std::uint8_t> stable, std::span<double> tau_c) {
    const double phi = std::abs(psi);
    const double cpsi = std::cos(psi);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        const double ri = rho[i];
        const double re_w = ri * cpsi;
        const double om = std::sqrt((ri - ai) * (ri + ai));
        const double alpha = detail::acos_ratio(ai, ri);
        const bool in_cone = -ri < ai && ai < ri;
        const bool st = (ai >= ri && ai > re_w) || (in_cone && phi > alpha + tau * om);
        stable[i] = st ? 1 : 0;
        tau_c[i] = (re_w < ai && ai < ri) ? (phi - alpha) / om : nan;
    }
}

void char_eval(const CharCoeffs& c, std::span<const double> zr, std::span<const double> zi,
               std::span<double> hr, std::span<double> hi, std::span<double> dr, std::span<double> di) {
    for (std::size_t i = 0; i < zr.size(); ++i) {
        const double e = std::exp(-c.tau * zr[i]);
        const double ec = e * std::cos(c.tau * zi[i]);
        const double es = e * std::sin(c.tau * zi[i]);
        const double pr = c.w_re * ec + c.w_im * es;  // w e^{-tau z}
        const double pi = c.w_im * ec - c.w_re * es;
        hr[i] = zr[i] + c.a_re - pr;
        hi[i] = zi[i] + c.a_im - pi;
        dr[i] = 1.0 + c.tau * pr;
        di[i] = c.tau * pi;
    }
}

void dpartition_points(std::span<const double> t, double shift, double tau, std::span<double> a,
                       std::span<double> rho) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double d = t[i] - shift;
        const double s = std::sin(d);
        const double q = -(t[i] / tau);
        a[i] = q * std::cos(d) / s;
        rho[i] = q / s;
    }
}

}  // namespace dstab::kernels::scalar
