#include <atomic>
#include <string>

#include "delaystab/errors.hpp"
#include "kernel_impl.hpp"

namespace dstab::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(DELAYSTAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::atomic<int>& active_slot() {
    static std::atomic<int> slot{static_cast<int>(detect_isa())};
    return slot;
}

void check_sizes(std::size_t n, std::size_t m) {
    if (n != m) throw DomainError("kernel arrays must have equal length");
}

Isa checked(Isa isa) {
    if (!isa_available(isa)) throw DomainError("kernel variant not available: " + std::string(isa_name(isa)));
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Simd128: return "simd128";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
        case Isa::Simd128: return true;
        case Isa::Avx2: return cpu_has_avx2();
    }
    return false;
}

Isa detect_isa() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Simd128; }

Isa active_isa() { return static_cast<Isa>(active_slot().load(std::memory_order_relaxed)); }

void set_active_isa(Isa isa) { active_slot().store(static_cast<int>(checked(isa)), std::memory_order_relaxed); }

void stability_scan(Isa isa, std::span<const double> a, std::span<const double> rho, double psi, double tau,
                    std::span<std::uint8_t> stable, std::span<double> tau_c) {
    check_sizes(a.size(), rho.size());
    check_sizes(a.size(), stable.size());
    check_sizes(a.size(), tau_c.size());
    switch (checked(isa)) {
        case Isa::Scalar: return scalar::stability_scan(a, rho, psi, tau, stable, tau_c);
        case Isa::Simd128: return simd128::stability_scan(a, rho, psi, tau, stable, tau_c);
        case Isa::Avx2:
#if defined(DELAYSTAB_HAVE_AVX2)
            return avx2::stability_scan(a, rho, psi, tau, stable, tau_c);
#else
            break;
#endif
    }
}

void stability_scan(std::span<const double> a, std::span<const double> rho, double psi, double tau,
                    std::span<std::uint8_t> stable, std::span<double> tau_c) {
    stability_scan(active_isa(), a, rho, psi, tau, stable, tau_c);
}

void char_eval(Isa isa, const CharCoeffs& c, std::span<const double> zr, std::span<const double> zi,
               std::span<double> hr, std::span<double> hi, std::span<double> dr, std::span<double> di) {
    check_sizes(zr.size(), zi.size());
    check_sizes(zr.size(), hr.size());
    check_sizes(zr.size(), hi.size());
    check_sizes(zr.size(), dr.size());
    check_sizes(zr.size(), di.size());
    switch (checked(isa)) {
        case Isa::Scalar: return scalar::char_eval(c, zr, zi, hr, hi, dr, di);
        case Isa::Simd128: return simd128::char_eval(c, zr, zi, hr, hi, dr, di);
        case Isa::Avx2:
#if defined(DELAYSTAB_HAVE_AVX2)
            return avx2::char_eval(c, zr, zi, hr, hi, dr, di);
#else
            break;
#endif
    }
}

void char_eval(const CharCoeffs& c, std::span<const double> zr, std::span<const double> zi,
               std::span<double> hr, std::span<double> hi, std::span<double> dr, std::span<double> di) {
    char_eval(active_isa(), c, zr, zi, hr, hi, dr, di);
}

void dpartition_points(Isa isa, std::span<const double> t, double shift, double tau, std::span<double> a,
                       std::span<double> rho) {
    check_sizes(t.size(), a.size());
    check_sizes(t.size(), rho.size());
    switch (checked(isa)) {
        case Isa::Scalar: return scalar::dpartition_points(t, shift, tau, a, rho);
        case Isa::Simd128: return simd128::dpartition_points(t, shift, tau, a, rho);
        case Isa::Avx2:
#if defined(DELAYSTAB_HAVE_AVX2)
            return avx2::dpartition_points(t, shift, tau, a, rho);
#else
            break;
#endif
    }
}

void dpartition_points(std::span<const double> t, double shift, double tau, std::span<double> a,
                       std::span<double> rho) {
    dpartition_points(active_isa(), t, shift, tau, a, rho);
}

}  // namespace dstab::kernels
