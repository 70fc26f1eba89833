#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "toricdm/errors.hpp"
#include "toricdm/gale.hpp"
#include "toricdm/rational_linalg.hpp"

using namespace toricdm;

TEST_CASE("Gale dual of the two-ray example with torsion") {
    FgAbelianGroup G(1, {2});
    GroupHomomorphism beta{G, {G.element({2}, {1}), G.element({-3}, {0})}};
    GaleDualData g = gale_dual(beta);
    CHECK(to_string(g.group) == "Z");
    CHECK(g.dual_map == IntegerMatrix{{6, 4}});
}

TEST_CASE("Gale duals of two fans on Z + Z/3") {
    FgAbelianGroup G(1, {3});
    GaleDualData g1 = gale_dual({G, {G.element({1}, {0}), G.element({-1}, {1})}});
    CHECK(to_string(g1.group) == "Z");
    CHECK(g1.dual_map == IntegerMatrix{{3, 3}});
    GaleDualData g2 = gale_dual({G, {G.element({1}, {0}), G.element({-1}, {0})}});
    CHECK(g2.group == G);
    CHECK(maps_equivalent(g2.group, g2.dual_map, IntegerMatrix{{1, 1}, {0, 0}}));
    CHECK_FALSE(maps_equivalent(g2.group, g2.dual_map, IntegerMatrix{{1, 1}, {1, 0}}));
    // torsion automorphism x -> 2x
    CHECK(maps_equivalent(FgAbelianGroup(1, {3}), IntegerMatrix{{1, 1}, {1, 0}}, IntegerMatrix{{1, 1}, {2, 0}}));
}

TEST_CASE("dual map kills the image of the transpose") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        GroupHomomorphism beta = fixtures::random_beta(rng, true);
        GaleDualData g = gale_dual(beta);
        CHECK(g.group.is_canonical());
        std::size_t n = beta.source_rank(), d = beta.target.rank();
        CHECK(g.group.rank() == n - d);
        // every functional on N pulled back to Z^n maps to zero
        IntegerMatrix B = beta.lift();
        for (std::size_t i = 0; i < d; ++i) {
            IntegerVector row = B.row(i);
            GroupElement img = g.group.reduce(g.dual_map * row);
            CHECK(img.is_zero());
        }
        // a different lift of beta gives an equivalent dual
        IntegerMatrix B2 = B;
        for (std::size_t k = 0; k < beta.target.torsion().size(); ++k)
            for (std::size_t j = 0; j < n; ++j) B2(d + k, j) += beta.target.torsion()[k] * static_cast<long>(j + 1);
        GaleDualData g2 = gale_dual_from_lift(beta.target, B2);
        CHECK(g2.group == g.group);
        if (rank(g.dual_map.block(0, g.group.rank(), 0, n)) == g.group.rank())
            CHECK(maps_equivalent(g.group, g.dual_map, g2.dual_map));
    }
}

TEST_CASE("double duality on random finite-cokernel maps") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 100; ++trial) {
        GroupHomomorphism beta = fixtures::random_beta(rng, true);
        CHECK(double_dual_check(beta));
    }
}

TEST_CASE("double duality rejects infinite cokernels") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        GroupHomomorphism beta = fixtures::random_beta(rng, false);
        CHECK_THROWS_AS(double_dual_check(beta), Error);
        try {
            double_dual_check(beta);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InfiniteCokernel);
        }
    }
}

TEST_CASE("dual of a short exact diagram along a ray") {
    // P(1,2,1) with sigma = first ray: Z -> Z^2 -> Z with beta3 = (2, -1)
    FgAbelianGroup Z1(1, {}), Z2(2, {});
    ShortExactDiagram D;
    D.beta1 = {Z1, {GroupElement{{1}, {}}}};
    D.beta2 = {Z2, {GroupElement{{1, 0}, {}}, GroupElement{{-1, 2}, {}}, GroupElement{{0, -1}, {}}}};
    D.beta3 = {Z1, {GroupElement{{2}, {}}, GroupElement{{-1}, {}}}};
    D.i = IntegerMatrix{{1}, {0}, {0}};
    D.p = IntegerMatrix{{0, 1, 0}, {0, 0, 1}};
    D.j = IntegerMatrix{{1}, {0}};
    D.s = IntegerMatrix{{0, 1}};
    CHECK(dual_sequence_check(D));

    ShortExactDiagram bad = D;
    bad.s = IntegerMatrix{{1, 1}};
    CHECK_THROWS_AS(dual_sequence_check(bad), Error);
}

TEST_CASE("dual of the diagram with trivial quotient") {
    FgAbelianGroup G(1, {3}), trivial(0, {});
    ShortExactDiagram D;
    D.beta1 = {G, {G.element({1}, {0}), G.element({-1}, {1})}};
    D.beta2 = D.beta1;
    D.beta3 = {trivial, {}};
    D.i = IntegerMatrix::identity(2);
    D.p = IntegerMatrix(0, 2);
    D.j = IntegerMatrix::identity(2);
    D.s = IntegerMatrix(0, 2);
    CHECK(dual_sequence_check(D));
}
