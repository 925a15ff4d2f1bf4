#pragma once

#include "oapoly/kernels.hpp"

namespace oapoly::kern::detail {

const Ops* scalar_ops();

// Returns nullptr when the AVX2 path is not compiled in.
const Ops* avx2_ops();

bool cpu_supports_avx2();

}  // namespace oapoly::kern::detail
