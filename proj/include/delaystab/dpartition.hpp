#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "delaystab/stability.hpp"

namespace dstab {

/// Subscript of a Gamma curve: the critical curve or branch k != 0.
struct CurveLabel {
    bool critical = true;
    int k = 0;

    static CurveLabel Critical() { return {true, 0}; }
    static CurveLabel Branch(int k);
    bool operator==(const CurveLabel&) const = default;
    /// "c" or the signed integer k.
    std::string str() const;
    static CurveLabel parse(const std::string& s);
};

/// Ladder label <-> curve label: Critical <-> c, Plus(n) <-> n, Minus(n) <-> -n.
CurveLabel to_curve_label(const LadderLabel& l);

enum class CurveKind { Hayes, Sakata, Gamma };

struct CurveSample {
    double param;  ///< theta for Hayes/Sakata, Omega for Gamma
    double a;
    double rho;    ///< |w| > 0
};

struct BoundaryCurve {
    CurveKind kind = CurveKind::Gamma;
    std::optional<CurveLabel> label;  ///< set for Gamma curves
    double psi = 0.0;                 ///< Arg(w) shared by every sample
    double tau = 1.0;
    std::vector<CurveSample> samples;
    std::optional<std::size_t> fold_index;  ///< Sakata curves with phi > pi/2

    std::complex<double> w_of(const CurveSample& s) const { return std::polar(s.rho, psi); }
};

/// Open interval (lo, hi).
struct FrequencyInterval {
    double lo;
    double hi;
    bool contains(double x) const { return lo < x && x < hi; }
    double length() const { return hi - lo; }
};

/// Interior grid of n points, cosine-graded toward both ends, with an
/// endpoint standoff of 1e-4 times the interval length.
std::vector<double> graded_grid(double lo, double hi, std::size_t n);

/// Point of the real-coefficient stability boundary at parameter theta in (0, pi).
CurveSample hayes_point(double theta, double tau);
/// Point of the fixed-|Arg w| stability boundary at theta in (0, phi).
CurveSample sakata_point(double theta, double phi, double tau);

BoundaryCurve hayes_curve(double tau, std::size_t n_samples);
/// For phi > pi/2 the fold theta = S(phi) is inserted as an extra sample.
BoundaryCurve sakata_curve(double phi, double tau, std::size_t n_samples);

FrequencyInterval interval_of(const CurveLabel& label, double psi);
BoundaryCurve gamma_curve(const CurveLabel& label, double psi, double tau, std::size_t n_samples);

/// Label whose delay equals tau within 1e-9 relative; Critical takes
/// priority, then ascending ladder order. Requires |a| < |w|.
std::optional<CurveLabel> match_tau_label(const CoefficientPoint& p, double tau, int n_max = 64);
/// Every label whose delay equals tau (more than one at coincidences).
std::vector<CurveLabel> match_tau_labels(const CoefficientPoint& p, double tau, int n_max = 64);

struct RayHit {
    double s;  ///< s * direction lies on the curve(s) below
    std::vector<CurveLabel> labels;
};

/// Scalars at which the ray through `direction` meets each Gamma curve of
/// Arg psi and delay tau, ascending.
std::vector<RayHit> ray_ordering(double psi, double tau, const CoefficientPoint& direction, int n_max);

/// Points on a grid in D_c with Arg(w) = psi.
struct ScanPoint {
    double a;
    double rho;
};
/// flags[i] is true iff critical_delay(grid[i]) > tau (false outside D_c).
std::vector<bool> critical_region_scan(double psi, double tau, const std::vector<ScanPoint>& grid);

}  // namespace dstab
