#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "toricdm/rational_linalg.hpp"

using namespace toricdm;

namespace {

GroupElement v(std::initializer_list<long> xs) {
    IntegerVector f;
    for (long x : xs) f.emplace_back(x);
    return GroupElement{f, {}};
}

// the positive orthant in Z^3 with a twisted triangulation around (2,1,1), (1,2,1), (1,1,2)
SubdivisionPair twisted_orthant(bool clockwise) {
    FgAbelianGroup Z3(3, {});
    std::vector<GroupElement> coarse_rays{v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})};
    std::vector<GroupElement> fine_rays = coarse_rays;
    for (auto r : {v({2, 1, 1}), v({1, 2, 1}), v({1, 1, 2})}) fine_rays.push_back(r);
    std::vector<Cone> cones = clockwise
        ? std::vector<Cone>{{0, 1, 4}, {1, 2, 5}, {0, 2, 3}, {0, 3, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}}
        : std::vector<Cone>{{0, 1, 3}, {1, 2, 4}, {0, 2, 5}, {1, 3, 4}, {2, 4, 5}, {0, 3, 5}, {3, 4, 5}};
    return {StackyFan::validate(Z3, coarse_rays, {{0, 1, 2}}), StackyFan::validate(Z3, fine_rays, cones)};
}

}  // namespace

TEST_CASE("bundled crepant resolutions") {
    for (const auto& name : fixtures::subdivision_pairs()) {
        CAPTURE(name);
        SubdivisionPair p = fixtures::pair(name);
        CHECK(is_subdivision(p.fine, p.coarse));
        CHECK(is_smooth(p.fine));
        CHECK(is_crepant(p));
        auto h = support_function(p);
        REQUIRE(h);
        CHECK(certifies_regularity(p, *h));
        FamilyReport r = hilbert_compare(p);
        CHECK(r.preconditions_hold());
        CHECK(r.equal);
        CHECK(r.orbifold_dims == orbifold_chow(p.coarse).dims);
        CHECK(r.resolution_dims == chow_graded_dims(p.fine));
        CHECK(r.warnings.empty());
    }
}

TEST_CASE("new rays sit at height one over the coarse cone") {
    for (const auto& name : fixtures::subdivision_pairs()) {
        CAPTURE(name);
        SubdivisionPair p = fixtures::pair(name);
        auto emb = ray_embedding(p.fine, p.coarse);
        REQUIRE(emb);
        for (std::size_t i = 0; i < p.fine.ray_count(); ++i) {
            if (std::find(emb->begin(), emb->end(), i) != emb->end()) continue;
            MinimalCone m = p.coarse.minimal_cone(p.fine.ray(i));
            Rational sum = 0;
            for (const auto& [k, c] : m.coords) sum += c;
            CHECK(sum == 1);
            // the same coordinates from a direct rational solve
            auto x = rational_solve(to_rational(p.coarse.bar_matrix(m.cone)), to_rational(p.fine.ray(i).free));
            REQUIRE(x);
            for (std::size_t k = 0; k < m.cone.size(); ++k) CHECK((*x)[k] == m.coords.at(m.cone[k]));
        }
    }
}

TEST_CASE("P(1,2,1) against F2") {
    SubdivisionPair p = fixtures::pair("p121-f2.json");
    FamilyReport r = hilbert_compare(p);
    CHECK(r.orbifold_square_zero.kind == SquareZeroVerdict::Kind::NotExists);
    CHECK(r.resolution_square_zero.kind == SquareZeroVerdict::Kind::Exists);
    CHECK(r.rings_distinguished);
    CHECK(*r.support == IntegerVector{0, 0, 0, 1});
    CHECK(r.ideals.I1 == std::vector<std::string>{"x1 - x2", "2*x2 - x3 + x4"});
    CHECK(r.ideals.I2 == std::vector<std::string>{"x1*x2 - x4^2", "x1*x2*x3", "x3*x4"});
    CHECK(r.ideals.I2_t == std::vector<std::string>{"x1*x2 - x4^2*t2^2", "x1*x2*x3", "x3*x4"});
    CHECK(r.ideals.I_fine == std::vector<std::string>{"x1*x2", "x3*x4"});
    CHECK(is_smooth(fixtures::fan("f2.json")));
    CHECK_FALSE(is_smooth(fixtures::fan("p121.json")));
}

TEST_CASE("non-crepant and non-refining inputs") {
    FgAbelianGroup Z2(2, {});
    std::vector<GroupElement> rays{v({1, 0}), v({-1, 2}), v({0, -1})};
    StackyFan coarse = StackyFan::validate(Z2, rays, {{0, 1}, {1, 2}, {0, 2}});
    auto fine_rays = rays;
    fine_rays.push_back(v({1, 1}));
    StackyFan fine = StackyFan::validate(Z2, fine_rays, {{0, 3}, {1, 3}, {1, 2}, {0, 2}});
    SubdivisionPair p{coarse, fine};
    CHECK(is_subdivision(fine, coarse));
    CHECK_FALSE(is_crepant(p));
    CHECK_FALSE(hilbert_compare(p).preconditions_hold());

    // a fan not refining the coarse one: the wall through (0,1) is missing from the coarse fan
    StackyFan other = StackyFan::validate(Z2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(is_subdivision(other, coarse));
    CHECK(is_subdivision(coarse, coarse));
}

TEST_CASE("twisted triangulations of the orthant are not regular") {
    for (bool clockwise : {true, false}) {
        SubdivisionPair p = twisted_orthant(clockwise);
        CHECK(is_subdivision(p.fine, p.coarse));
        CHECK_FALSE(support_function(p).has_value());
    }
}
