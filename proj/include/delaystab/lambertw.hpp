#pragma once

#include <complex>

namespace dstab {

/// Principal real branch, x >= -1/e. Inputs up to 1e-15 below -1/e are clamped.
double w0_real(double x);
/// Lower real branch, x in [-1/e, 0).
double wm1_real(double x);

/// Branch k of the complex Lambert W function (standard branch convention;
/// values on the negative real axis are taken as limits from above).
std::complex<double> wk_complex(int k, std::complex<double> zeta);

/// Branch index of w as a solution of w e^w = zeta, from the unwinding
/// identity w + log w = log zeta + 2 pi i k.
int lambert_branch_of(std::complex<double> w, std::complex<double> zeta);

}  // namespace dstab
