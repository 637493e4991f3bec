#pragma once

// Per-variant entry points. Each variant lives in its own namespace so the
// AVX2 translation unit never shares symbols with the baseline ones.

#include <cstdint>
#include <span>

#include "delaystab/kernels.hpp"

#define DSTAB_DECLARE_KERNELS(NS)                                                                       \
    namespace dstab::kernels::NS {                                                                      \
    void stability_scan(std::span<const double> a, std::span<const double> rho, double psi, double tau, \
                        std::span<std::uint8_t> stable, std::span<double> tau_c);                       \
    void char_eval(const CharCoeffs& c, std::span<const double> zr, std::span<const double> zi,         \
                   std::span<double> hr, std::span<double> hi, std::span<double> dr,                    \
                   std::span<double> di);                                                               \
    void dpartition_points(std::span<const double> t, double shift, double tau, std::span<double> a,    \
                           std::span<double> rho);                                                      \
    }

DSTAB_DECLARE_KERNELS(scalar)
DSTAB_DECLARE_KERNELS(simd128)
DSTAB_DECLARE_KERNELS(avx2)

#undef DSTAB_DECLARE_KERNELS
