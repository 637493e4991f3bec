#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace dstab::kernels {

/// Instruction-set variants of the batch kernels.
enum class Isa {
    Scalar,   ///< plain loops, the reference
    Simd128,  ///< SSE2 on x86-64, NEON on AArch64
    Avx2,     ///< AVX2 + FMA, x86-64 only
};

std::string_view isa_name(Isa isa);
/// Whether this build and this CPU can run the variant.
bool isa_available(Isa isa);
/// Best available variant on the running CPU.
Isa detect_isa();
/// Variant used by the overloads without an explicit Isa (defaults to detect_isa()).
Isa active_isa();
void set_active_isa(Isa isa);

/// Stability of x' = -a x + rho e^{i psi} x(t - tau) over arrays of (a, rho).
/// stable[i] is 1 or 0; tau_c[i] is the critical delay or NaN outside region II.
void stability_scan(Isa isa, std::span<const double> a, std::span<const double> rho, double psi, double tau,
                    std::span<std::uint8_t> stable, std::span<double> tau_c);
void stability_scan(std::span<const double> a, std::span<const double> rho, double psi, double tau,
                    std::span<std::uint8_t> stable, std::span<double> tau_c);

/// Characteristic function coefficients: h(z) = z + a - w e^{-tau z}.
struct CharCoeffs {
    double a_re, a_im, w_re, w_im, tau;
};

/// h(z) and h'(z) = 1 + tau w e^{-tau z} at the points z = zr + i zi.
void char_eval(Isa isa, const CharCoeffs& c, std::span<const double> zr, std::span<const double> zi,
               std::span<double> hr, std::span<double> hi, std::span<double> dr, std::span<double> di);
void char_eval(const CharCoeffs& c, std::span<const double> zr, std::span<const double> zi,
               std::span<double> hr, std::span<double> hi, std::span<double> dr, std::span<double> di);

/// Boundary-curve points a = -(t/tau) cot(t - shift), rho = -(t/tau) / sin(t - shift).
void dpartition_points(Isa isa, std::span<const double> t, double shift, double tau,
                       std::span<double> a, std::span<double> rho);
void dpartition_points(std::span<const double> t, double shift, double tau,
                       std::span<double> a, std::span<double> rho);

}  // namespace dstab::kernels
