#pragma once

#include "centropy/simd.hpp"

namespace centropy::simd::detail {

extern const Kernels kScalarKernels;

#if defined(CENTROPY_HAVE_AVX2)
extern const Kernels kAvx2Kernels;
#endif

}  // namespace centropy::simd::detail
