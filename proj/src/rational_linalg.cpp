#include "toricdm/rational_linalg.hpp"

namespace toricdm {

RowEchelon rref(const RationalMatrix& M) {
    RowEchelon e{M, {}};
    RationalMatrix& a = e.reduced;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a(p, col) == 0) ++p;
        if (p == m) continue;
        if (p != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < n; ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational c = a(i, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= c * a(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const RationalMatrix& M) { return rref(M).pivots.size(); }
std::size_t rank(const IntegerMatrix& M) { return rank(to_rational(M)); }

std::optional<RationalVector> rational_solve(const RationalMatrix& A, const RationalVector& b) {
    RationalMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    RowEchelon e = rref(aug);
    RationalVector x(A.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == A.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, A.cols());
    }
    return x;
}

RationalMatrix nullspace(const RationalMatrix& A) {
    RowEchelon e = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> cols;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(A.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        cols.push_back(std::move(v));
    }
    return RationalMatrix::from_columns(A.cols(), cols);
}

std::optional<RationalMatrix> inverse(const RationalMatrix& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) return std::nullopt;
    RowEchelon e = rref(A.hstack(RationalMatrix::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    return e.reduced.block(0, n, n, 2 * n);
}

}  // namespace toricdm
