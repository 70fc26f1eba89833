#pragma once

#include <optional>

#include "toricdm/matrix.hpp"

namespace toricdm {

/// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ...
struct SmithForm {
    IntegerMatrix U, Uinv;
    IntegerMatrix S;
    IntegerMatrix V, Vinv;
    std::size_t rank = 0;

    Integer diagonal(std::size_t i) const { return i < rank ? S(i, i) : Integer(0); }
};

SmithForm smith_normal_form(const IntegerMatrix& M);

/// Columns of V past the rank: a basis of the integer kernel.
IntegerMatrix kernel_basis(const IntegerMatrix& M);

/// Some integer x with A x = b, if one exists.
std::optional<IntegerVector> integer_solve(const IntegerMatrix& A, const IntegerVector& b);

/// Every column of B lies in the Z-span of the columns of A.
bool lattice_contains(const IntegerMatrix& A, const IntegerMatrix& B);
bool lattice_equal(const IntegerMatrix& A, const IntegerMatrix& B);

Integer determinant(const IntegerMatrix& M);
bool is_unimodular(const IntegerMatrix& M);

}  // namespace toricdm
