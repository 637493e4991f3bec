#include "delaystab/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

#include "delaystab/io.hpp"
#include "delaystab/roots.hpp"
#include "delaystab/simulate.hpp"
#include "delaystab/stability.hpp"

namespace dstab {

std::vector<SamplePoint> draw_points(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    // Explicit mapping keeps draws identical across standard libraries.
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<SamplePoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double a = -3.0 + 6.0 * unit();
        const double r = 3.0 * std::sqrt(unit());
        const double th = std::numbers::pi * (2.0 * unit() - 1.0);
        const double tau = 5.0 * (1.0 - unit());
        out.push_back({a, r * std::cos(th), r * std::sin(th), tau});
    }
    return out;
}

bool well_separated(const SamplePoint& s, double margin) {
    const CoefficientPoint p{s.a, {s.w_re, s.w_im}};
    return region_slack(p) >= margin && ladder_distance(p, s.tau) >= margin;
}

VerifyReport run_verification(std::uint64_t seed, std::size_t count, bool simulate_points, double margin) {
    VerifyReport rep;
    for (const auto& s : draw_points(seed, count)) {
        ++rep.drawn;
        if (!well_separated(s, margin)) continue;
        ++rep.evaluated;
        const std::complex<double> w(s.w_re, s.w_im);
        const bool st = is_stable(s.a, w, s.tau);
        if (st) ++rep.stable;
        const CharParams cp{s.a, w, s.tau};
        const int n = count_roots_rect(cp, right_half_rect(cp));
        if ((n == 0) != st) ++rep.count_mismatch;
        const bool none_right = roots_right_of(cp, 0.0).roots.empty();
        if (none_right != st || (n == 0) != none_right) ++rep.roots_mismatch;
        if (simulate_points) {
            const SimResult r = simulate(s.a, w, s.tau, 200.0 * s.tau);
            if (r.verdict == Verdict::Inconclusive) {
                ++rep.sim_inconclusive;
            } else if ((r.verdict == Verdict::Decaying) != st) {
                ++rep.sim_mismatch;
            }
        }
    }
    return rep;
}

std::string verify_report_json(std::uint64_t seed, const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = io::kSchemaVersion;
    j["seed"] = seed;
    j["drawn"] = r.drawn;
    j["evaluated"] = r.evaluated;
    j["stable"] = r.stable;
    j["count_mismatch"] = r.count_mismatch;
    j["roots_mismatch"] = r.roots_mismatch;
    j["sim_mismatch"] = r.sim_mismatch;
    j["sim_inconclusive"] = r.sim_inconclusive;
    j["agree"] = r.agree();
    return j.dump(2) + "\n";
}

}  // namespace dstab
