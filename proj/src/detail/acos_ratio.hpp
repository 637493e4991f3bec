#pragma once

#include <cmath>
#include <numbers>

namespace dstab::detail {

// arccos(a / rho) for |a| <= rho, accurate near a = +-rho where acos loses
// digits: arccos(x) = 2 asin(sqrt((1 - x) / 2)).
inline double acos_ratio(double a, double rho) {
    const double x = a / rho;
    if (x > 0.5) return 2.0 * std::asin(std::sqrt((rho - a) / (2.0 * rho)));
    if (x < -0.5) return std::numbers::pi - 2.0 * std::asin(std::sqrt((rho + a) / (2.0 * rho)));
    return std::acos(x);
}

}  // namespace dstab::detail
