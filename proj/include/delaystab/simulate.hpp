#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace dstab {

enum class Verdict { Decaying, Growing, Inconclusive };
std::string_view verdict_name(Verdict v);

struct SimResult {
    double decay_ratio;  ///< sup|x| on [H - tau, H] over sup|x| on [H/2 - tau, H/2]
    Verdict verdict;
};

enum class HistoryKind {
    Constant,       ///< x = 1 on [-tau, 0]
    Trigonometric,  ///< seeded random sum of a few sinusoids
};

struct SimOptions {
    int steps_per_delay = 64;
    HistoryKind history = HistoryKind::Constant;
    std::uint64_t history_seed = 0;
};

/// Integrates x'(t) = -a x(t) + w x(t - tau) by the method of steps with
/// classical RK4. Requires horizon >= 20 tau.
SimResult simulate(std::complex<double> a, std::complex<double> w, double tau, double horizon,
                   const SimOptions& opts = {});

}  // namespace dstab
