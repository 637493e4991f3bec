#pragma once

namespace dstab {

/// arccot with range (0, pi).
double arccot(double x);

/// C(theta) = theta * cot(theta) on (0, pi).
double big_c(double theta);
/// Inverse of big_c, defined for r < 1, values in (0, pi).
double big_c_inv(double r);
/// R(r) = C^{-1}(r) / sin(C^{-1}(r)) for r < 1.
double big_r(double r);

/// C(theta; phi) = theta * cot(theta - phi) for 0 <= theta < phi < pi.
double big_c_phi(double theta, double phi);

/// Turning point of C(.; phi) for phi in (pi/2, pi).
struct SplitPoint {
    double phi;
    double s_phi;  ///< argmax of C(.; phi) on [0, phi)
    double m_phi;  ///< maximum value, cos^2(s_phi - phi)
};
SplitPoint split_point(double phi);

/// Inverse of C(.; phi) for phi in (0, pi/2]; r <= 0, values in [0, phi).
double big_c_phi_inv(double r, double phi);
/// Increasing inverse branch onto [0, S(phi)]; r in [0, M(phi)], phi in (pi/2, pi).
double big_c1_inv(double r, double phi);
/// Decreasing inverse branch onto [S(phi), phi); r <= M(phi), phi in (pi/2, pi).
double big_c2_inv(double r, double phi);

/// R(r; phi) = -C^{-1}(r; phi) / sin(C^{-1}(r; phi) - phi), phi in (0, pi/2].
double big_r_phi(double r, double phi);
double big_r1(double r, double phi);
double big_r2(double r, double phi);

}  // namespace dstab
