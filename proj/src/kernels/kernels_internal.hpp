#pragma once

#include "coldrec/kernels/kernels.hpp"

namespace coldrec::kernels {

#if defined(COLDREC_HAVE_AVX2)
const Ops& avx2_ops();
bool cpu_has_avx2();
#endif

#if defined(COLDREC_HAVE_NEON)
const Ops& neon_ops();
#endif

}  // namespace coldrec::kernels
