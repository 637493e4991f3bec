#pragma once

#include <complex>
#include <string_view>
#include <variant>
#include <vector>

namespace dstab {

/// Coefficients of x'(t) = -a x(t) + w x(t - tau) with real a.
struct CoefficientPoint {
    double a = 0.0;
    std::complex<double> w{};

    double rho() const { return std::abs(w); }
    bool has_arg() const { return w != 0.0; }
    /// Principal argument in (-pi, pi]; negative real w maps to +pi.
    double psi() const;
};

enum class RegionClass {
    DelayIndependentStable,    // I
    DelayDependent,            // II
    DelayIndependentUnstable,  // III
};
std::string_view region_tag(RegionClass r);

struct AllPositive {};
struct EmptyWindow {};
struct UpTo {
    double tau_c;
};
using DelayWindow = std::variant<AllPositive, EmptyWindow, UpTo>;
bool window_contains(const DelayWindow& win, double tau);

enum class CrossingKind { Critical, Plus, Minus };

struct LadderLabel {
    CrossingKind kind;
    int n;         ///< 0 for Critical
    double omega;  ///< signed crossing frequency: the root is i*omega
    bool operator==(const LadderLabel&) const = default;
};

struct LadderEntry {
    double tau;
    std::vector<LadderLabel> labels;  ///< more than one label marks a coincidence
    bool coincident() const { return labels.size() > 1; }
};

struct TauLadder {
    std::vector<LadderEntry> entries;
};

/// Principal argument with the (-pi, pi] convention.
double principal_arg(std::complex<double> w);

RegionClass classify(const CoefficientPoint& p);

/// Both closed forms of the critical delay.
struct CriticalDelayForms {
    double arccos_form;
    double arccot_form;
};
CriticalDelayForms critical_delay_forms(const CoefficientPoint& p);
/// Critical delay; requires region II. Throws NumericalError if the two
/// closed forms disagree beyond 1e-11 relative.
double critical_delay(const CoefficientPoint& p);

/// Alternative form with w = -b e^{i theta}, theta in [-pi/2, pi/2].
double matsunaga_delay(double b, double theta, double a);
struct MatsunagaParams {
    double b;
    double theta;
};
/// Writes w as -b e^{i theta} with theta in [-pi/2, pi/2].
MatsunagaParams matsunaga_params(std::complex<double> w);

DelayWindow delay_window(const CoefficientPoint& p);

/// sqrt(|w|^2 - a^2); requires |a| < |w|.
double angular_frequency(const CoefficientPoint& p);

/// Imaginary-axis crossing delays up to index n_max; requires |a| < |w|.
TauLadder tau_ladder(const CoefficientPoint& p, int n_max);

bool is_stable(double a, std::complex<double> w, double tau);
bool is_stable_complex(std::complex<double> a, std::complex<double> w, double tau);

/// True iff every solution z of z e^z = zeta has Re z < sigma.
bool lambert_halfplane_test(std::complex<double> zeta, double sigma);
/// Real-zeta form: sigma > -1 and -R(-sigma) e^sigma < zeta < sigma e^sigma.
bool lambert_halfplane_test_real(double zeta, double sigma);

bool hayes_region_test(double a, double w, double tau);
/// Requires w off the real axis.
bool sakata_region_test(double a, std::complex<double> w, double tau);
/// Dispatches to hayes_region_test for real w, sakata_region_test otherwise.
bool region_test(double a, std::complex<double> w, double tau);

/// Smallest slack among the inequalities that define regions I-III
/// (|a| vs |w|, a vs Re w); zero on a region boundary.
double region_slack(const CoefficientPoint& p);
/// Distance from tau to the nearest ladder value with index <= n_max,
/// +inf when |a| >= |w|.
double ladder_distance(const CoefficientPoint& p, double tau, int n_max = 64);

}  // namespace dstab
