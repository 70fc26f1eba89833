#pragma once

#include <optional>

#include "toricdm/matrix.hpp"

namespace toricdm {

/// Some x >= 0 with A x = b, found by exact phase-one simplex (Bland's rule).
std::optional<RationalVector> feasible_point(const RationalMatrix& A, const RationalVector& b);

}  // namespace toricdm
