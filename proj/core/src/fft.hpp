#pragma once

#include <vector>

#include "qspace/geometry.hpp"

namespace qspace::detail {

/// In-place unnormalized DFT: out[k] = sum_m in[m] e^{sign * 2 pi i k m / n}.
void dft_inplace(std::vector<cplx>& data, int sign);

}  // namespace qspace::detail
