#include "toricdm/lp.hpp"

namespace toricdm {

std::optional<RationalVector> feasible_point(const RationalMatrix& A, const RationalVector& b) {
    const std::size_t m = A.rows(), n = A.cols();
    const std::size_t width = n + m + 1;  // structural, artificial, right-hand side
    RationalMatrix t(m + 1, width);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t(i, j) = sign * A(i, j);
        t(i, n + i) = 1;
        t(i, width - 1) = sign * b[i];
        basis[i] = n + i;
    }
    // reduced costs of the phase-one objective (sum of artificials)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) t(m, j) -= t(i, j);

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (t(m, j) < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rational ratio = t(i, width - 1) / t(i, enter);
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded cannot occur for phase one
        Rational piv = t(leave, enter);
        for (std::size_t j = 0; j < width; ++j) t(leave, j) /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t(i, enter) == 0) continue;
            Rational f = t(i, enter);
            for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }
    if (t(m, width - 1) != 0) return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t(i, width - 1);
    return x;
}

}  // namespace toricdm
