#include "toricdm/smith.hpp"

#include <utility>

#include "toricdm/errors.hpp"

namespace toricdm {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotOnRay: return "NotOnRay";
        case ErrorKind::DependentGenerators: return "DependentGenerators";
        case ErrorKind::RaysDoNotSpan: return "RaysDoNotSpan";
        case ErrorKind::NotAFan: return "NotAFan";
        case ErrorKind::OutsideSupport: return "OutsideSupport";
        case ErrorKind::NotMaximalCone: return "NotMaximalCone";
        case ErrorKind::NotACone: return "NotACone";
        case ErrorKind::ConditionSpanQuotFails: return "ConditionSpanQuotFails";
        case ErrorKind::InfiniteCokernel: return "InfiniteCokernel";
        case ErrorKind::BadDiagram: return "BadDiagram";
        case ErrorKind::MismatchedGroup: return "MismatchedGroup";
        case ErrorKind::NotComplete: return "NotComplete";
        case ErrorKind::NotAComponent: return "NotAComponent";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

namespace {

// Elementary operations applied to S while keeping U, Uinv, V, Vinv in step.
struct Reducer {
    SmithForm& f;
    std::size_t m, n;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(f.S(a, j), f.S(b, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(f.U(a, j), f.U(b, j));
        for (std::size_t i = 0; i < m; ++i) std::swap(f.Uinv(i, a), f.Uinv(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(f.S(i, a), f.S(i, b));
        for (std::size_t i = 0; i < n; ++i) std::swap(f.V(i, a), f.V(i, b));
        for (std::size_t j = 0; j < n; ++j) std::swap(f.Vinv(a, j), f.Vinv(b, j));
    }
    // row_i += q * row_t
    void add_row(std::size_t i, std::size_t t, const Integer& q) {
        for (std::size_t j = 0; j < n; ++j) f.S(i, j) += q * f.S(t, j);
        for (std::size_t j = 0; j < m; ++j) f.U(i, j) += q * f.U(t, j);
        for (std::size_t k = 0; k < m; ++k) f.Uinv(k, t) -= q * f.Uinv(k, i);
    }
    // col_j += q * col_t
    void add_col(std::size_t j, std::size_t t, const Integer& q) {
        for (std::size_t i = 0; i < m; ++i) f.S(i, j) += q * f.S(i, t);
        for (std::size_t i = 0; i < n; ++i) f.V(i, j) += q * f.V(i, t);
        for (std::size_t k = 0; k < n; ++k) f.Vinv(t, k) -= q * f.Vinv(j, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) f.S(i, j) = -f.S(i, j);
        for (std::size_t j = 0; j < m; ++j) f.U(i, j) = -f.U(i, j);
        for (std::size_t k = 0; k < m; ++k) f.Uinv(k, i) = -f.Uinv(k, i);
    }
};

Integer truncated_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& M) {
    const std::size_t m = M.rows(), n = M.cols();
    SmithForm f{IntegerMatrix::identity(m), IntegerMatrix::identity(m), M,
                IntegerMatrix::identity(n), IntegerMatrix::identity(n), 0};
    Reducer r{f, m, n};
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // smallest nonzero magnitude in the trailing block, row-major
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (f.S(i, j) != 0 && (pi == m || abs(f.S(i, j)) < abs(f.S(pi, pj)))) pi = i, pj = j;
        if (pi == m) break;
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);

        for (;;) {
            bool clear = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (f.S(i, t) == 0) continue;
                r.add_row(i, t, -truncated_quotient(f.S(i, t), f.S(t, t)));
                if (f.S(i, t) != 0) clear = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (f.S(t, j) == 0) continue;
                r.add_col(j, t, -truncated_quotient(f.S(t, j), f.S(t, t)));
                if (f.S(t, j) != 0) clear = false;
            }
            if (!clear) {
                // a remainder is now smaller than the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (f.S(i, t) != 0 && abs(f.S(i, t)) < abs(f.S(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (f.S(t, j) != 0 && abs(f.S(t, j)) < abs(f.S(bi, bj))) bi = t, bj = j;
                r.swap_rows(t, bi);
                r.swap_cols(t, bj);
                continue;
            }
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(f.S(i, j).get_mpz_t(), f.S(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            r.add_row(t, bad, 1);
        }
        if (f.S(t, t) < 0) r.negate_row(t);
    }
    f.rank = t;
    return f;
}

IntegerMatrix kernel_basis(const IntegerMatrix& M) {
    SmithForm f = smith_normal_form(M);
    std::vector<std::size_t> idx;
    for (std::size_t j = f.rank; j < M.cols(); ++j) idx.push_back(j);
    return f.V.select_columns(idx);
}

std::optional<IntegerVector> integer_solve(const IntegerMatrix& A, const IntegerVector& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("integer_solve: shape mismatch");
    SmithForm f = smith_normal_form(A);
    IntegerVector ub = f.U * b;
    IntegerVector y(A.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < f.rank) {
            const Integer& d = f.S(i, i);
            if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return f.V * y;
}

bool lattice_contains(const IntegerMatrix& A, const IntegerMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("lattice_contains: shape mismatch");
    SmithForm f = smith_normal_form(A);
    IntegerMatrix ub = f.U * B;
    for (std::size_t i = 0; i < ub.rows(); ++i)
        for (std::size_t j = 0; j < ub.cols(); ++j) {
            if (i < f.rank) {
                if (!mpz_divisible_p(ub(i, j).get_mpz_t(), f.S(i, i).get_mpz_t())) return false;
            } else if (ub(i, j) != 0) {
                return false;
            }
        }
    return true;
}

bool lattice_equal(const IntegerMatrix& A, const IntegerMatrix& B) {
    return lattice_contains(A, B) && lattice_contains(B, A);
}

// Fraction-free Bareiss elimination.
Integer determinant(const IntegerMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntegerMatrix a = M;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& M) {
    if (M.rows() != M.cols()) return false;
    return abs(determinant(M)) == 1;
}

}  // namespace toricdm
