#define DSTAB_KERNEL_NS simd128
#include "kernels_simd.inl"
