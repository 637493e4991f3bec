#if !defined(__AVX2__)
#error "kernels_avx2.cpp must be compiled with -mavx2 -mfma"
#endif
#define DSTAB_KERNEL_NS avx2
#include "kernels_simd.inl"
