#pragma once

#include <string>
#include <vector>

#include "delaystab/dpartition.hpp"
#include "delaystab/roots.hpp"
#include "delaystab/stability.hpp"

namespace dstab::io {

inline constexpr int kSchemaVersion = 1;

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);
double parse_double(const std::string& s);

std::string curve_kind_name(CurveKind k);
std::string crossing_kind_name(CrossingKind k);

/// Header "param,a,rho,w_re,w_im", one row per sample, LF endings.
std::string curve_to_csv(const BoundaryCurve& c);
/// Samples from curve_to_csv output; metadata is taken from `meta`.
BoundaryCurve curve_from_csv(const std::string& text, const BoundaryCurve& meta);
std::string curve_to_json(const BoundaryCurve& c);

/// One row per label: entry,tau,label,n,omega.
std::string ladder_to_csv(const TauLadder& l);
std::string ladder_to_json(const CoefficientPoint& p, const TauLadder& l);

std::string roots_to_json(const CharParams& p, double sigma_min, const RootSet& r);

struct ScanRow {
    double a;
    double rho;
    bool stable;
    double tau_c;  ///< NaN outside region II
};
/// Header "a,rho,stable,tau_c".
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace dstab::io
