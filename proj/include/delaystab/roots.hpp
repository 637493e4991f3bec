#pragma once

#include <complex>
#include <vector>

#include "delaystab/errors.hpp"

namespace dstab {

/// h(z) = z + a - w e^{-tau z}.
struct CharParams {
    std::complex<double> a{};
    std::complex<double> w{};
    double tau = 1.0;
};

std::complex<double> char_value(const CharParams& p, std::complex<double> z);
/// h'(z) = 1 + tau w e^{-tau z}.
std::complex<double> char_derivative(const CharParams& p, std::complex<double> z);

struct RootEntry {
    std::complex<double> z;
    int branch;       ///< Lambert branch index k
    double residual;  ///< |h(z)|
    bool merged = false;  ///< another branch produced the same root (double root)
};

struct RootSet {
    std::vector<RootEntry> roots;
};

/// Every root with Re z >= sigma_min, from the Lambert branches, Newton-polished.
RootSet roots_right_of(const CharParams& p, double sigma_min);

/// Newton iteration on h; returns the iterate with the smallest |h|.
std::complex<double> newton_refine(const CharParams& p, std::complex<double> z, int max_iter = 8);

struct Rect {
    double re_lo, re_hi, im_lo, im_hi;
};
/// [0, |a|+|w|+1] x [-(|a|+|w|+1), |a|+|w|+1].
Rect right_half_rect(const CharParams& p);

class RootOnContourError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Number of roots inside rect, by the argument principle.
int count_roots_rect(const CharParams& p, const Rect& rect);

/// dz/ds at a root z = i omega0 crossed at delay s0.
std::complex<double> crossing_derivative(std::complex<double> a, double omega0, double s0);
/// dz/dtau at a root z: -z (z + a) / (1 + tau (z + a)).
std::complex<double> root_velocity(const CharParams& p, std::complex<double> z);
/// Follows a root from p.tau to tau_to by predictor-corrector continuation.
std::complex<double> track_root(const CharParams& p, std::complex<double> z0, double tau_to, double step);

struct Envelope {
    double sigma0_minus;
    double sigma0_plus;
    double sigma_minus1;
};
/// Largest tau with tau |w| e^{tau |a|} < 1/e.
double envelope_tau_bound(std::complex<double> a, std::complex<double> w);
Envelope envelopes(std::complex<double> a, std::complex<double> w, double tau);

}  // namespace dstab
