#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "toricdm/rational_linalg.hpp"
#include "toricdm/smith.hpp"

using namespace toricdm;

namespace {

bool diagonal_with_divisibility(const SmithForm& f) {
    for (std::size_t i = 0; i < f.S.rows(); ++i)
        for (std::size_t j = 0; j < f.S.cols(); ++j)
            if (i != j && f.S(i, j) != 0) return false;
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (f.S(i, i) <= 0) return false;
        if (i + 1 < f.rank && f.S(i + 1, i + 1) % f.S(i, i) != 0) return false;
    }
    for (std::size_t i = f.rank; i < std::min(f.S.rows(), f.S.cols()); ++i)
        if (f.S(i, i) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("smith form of random matrices") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 500; ++trial) {
        auto M = fixtures::random_matrix(rng, dim(rng), dim(rng), -20, 20);
        SmithForm f = smith_normal_form(M);
        CHECK(f.U * M * f.V == f.S);
        CHECK(f.U * f.Uinv == IntegerMatrix::identity(M.rows()));
        CHECK(f.V * f.Vinv == IntegerMatrix::identity(M.cols()));
        CHECK(diagonal_with_divisibility(f));
        CHECK(f.rank == rank(M));
        if (M.rows() == M.cols()) {
            Integer prod = 1;
            for (std::size_t i = 0; i < M.rows(); ++i) prod *= f.diagonal(i);
            long long d = fixtures::det_oracle(fixtures::to_ll(M));
            CHECK(prod == Integer(static_cast<long>(d < 0 ? -d : d)));
        }
    }
}

TEST_CASE("smith form edge shapes") {
    IntegerMatrix zero(2, 3);
    SmithForm f = smith_normal_form(zero);
    CHECK(f.rank == 0);
    CHECK(f.U * zero * f.V == f.S);

    IntegerMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    f = smith_normal_form(m);
    CHECK(f.diagonal(0) == 2);
    CHECK(f.diagonal(1) == 6);
    CHECK(f.diagonal(2) == 12);
}

TEST_CASE("kernel basis spans the integer kernel") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto M = fixtures::random_matrix(rng, 2, 4, -5, 5);
        IntegerMatrix K = kernel_basis(M);
        CHECK((M * K).is_zero());
        CHECK(K.cols() == 4 - rank(M));
        // brute force: every small kernel vector lies in the span of K
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c)
                    for (long d = -2; d <= 2; ++d) {
                        IntegerVector x{a, b, c, d};
                        if (!std::all_of((M * x).begin(), (M * x).end(), [](const Integer& v) { return v == 0; })) continue;
                        CHECK(lattice_contains(K, IntegerMatrix::from_columns(4, {x})));
                    }
    }
}

TEST_CASE("integer solve agrees with brute force") {
    IntegerMatrix A{{2, 4}, {0, 3}};
    for (long u = -6; u <= 6; ++u)
        for (long v = -6; v <= 6; ++v) {
            bool found = false;
            for (long x = -10; x <= 10 && !found; ++x)
                for (long y = -10; y <= 10 && !found; ++y) found = (2 * x + 4 * y == u && 3 * y == v);
            auto s = integer_solve(A, {u, v});
            CHECK(found == s.has_value());
            if (s) CHECK(A * *s == IntegerVector{u, v});
        }
}

TEST_CASE("determinant and unimodularity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto M = fixtures::random_matrix(rng, 4, 4, -9, 9);
        long long d = fixtures::det_oracle(fixtures::to_ll(M));
        CHECK(determinant(M) == Integer(static_cast<long>(d)));
        CHECK(is_unimodular(M) == (d == 1 || d == -1));
    }
}

TEST_CASE("rational linear algebra") {
    RationalMatrix A = to_rational(IntegerMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(A) == 2);
    RationalMatrix N = nullspace(A);
    CHECK(N.cols() == 1);
    CHECK((A * N).is_zero());
    CHECK_FALSE(inverse(A).has_value());
    auto x = rational_solve(A, {Rational(1), Rational(2), Rational(1, 2)});
    REQUIRE(x);
    CHECK(A * *x == RationalVector{Rational(1), Rational(2), Rational(1, 2)});
    CHECK_FALSE(rational_solve(A, {Rational(1), Rational(1), Rational(0)}).has_value());

    RationalMatrix B = to_rational(IntegerMatrix{{2, 1}, {1, 1}});
    auto Bi = inverse(B);
    REQUIRE(Bi);
    CHECK(B * *Bi == RationalMatrix::identity(2));
}
