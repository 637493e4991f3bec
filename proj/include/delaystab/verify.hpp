#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dstab {

/// A random test point: real a, complex w, delay tau.
struct SamplePoint {
    double a;
    double w_re;
    double w_im;
    double tau;
};

/// Deterministic draw with a in [-3, 3], |w| <= 3, Arg(w) uniform, tau in (0, 5].
std::vector<SamplePoint> draw_points(std::uint64_t seed, std::size_t count);

/// True when p is at least `margin` away from every region boundary and
/// from every ladder delay.
bool well_separated(const SamplePoint& p, double margin);

struct VerifyReport {
    std::size_t drawn = 0;
    std::size_t evaluated = 0;       ///< after the separation filter
    std::size_t stable = 0;
    std::size_t count_mismatch = 0;  ///< closed form vs argument principle
    std::size_t roots_mismatch = 0;  ///< closed form vs Lambert enumeration
    std::size_t sim_mismatch = 0;    ///< closed form vs simulator (conclusive runs only)
    std::size_t sim_inconclusive = 0;
    bool agree() const { return count_mismatch == 0 && roots_mismatch == 0 && sim_mismatch == 0; }
};

/// Compares closed-form stability with root counting, root enumeration and,
/// when `simulate_points` is set, the simulator at horizon 200 tau.
VerifyReport run_verification(std::uint64_t seed, std::size_t count, bool simulate_points = true,
                              double margin = 1e-4);

std::string verify_report_json(std::uint64_t seed, const VerifyReport& r);

}  // namespace dstab
