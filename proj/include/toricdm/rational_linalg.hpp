#pragma once

#include <optional>

#include "toricdm/matrix.hpp"

namespace toricdm {

struct RowEchelon {
    RationalMatrix reduced;            // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(const RationalMatrix& M);

std::size_t rank(const RationalMatrix& M);
std::size_t rank(const IntegerMatrix& M);

/// Some x with A x = b over Q (free variables set to zero).
std::optional<RationalVector> rational_solve(const RationalMatrix& A, const RationalVector& b);

/// Columns form a basis of the rational null space.
RationalMatrix nullspace(const RationalMatrix& A);

std::optional<RationalMatrix> inverse(const RationalMatrix& A);

}  // namespace toricdm
