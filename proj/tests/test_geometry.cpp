#include <doctest.h>

#include <algorithm>
#include <random>

#include "exkn/conjecture.hpp"
#include "exkn/geometry.hpp"
#include "test_util.hpp"

using namespace exkn;

namespace {

Point pt2(long x, long y) { return Point(Rational(x), Rational(y)); }

}  // namespace

TEST_CASE("hull2d basic shapes") {
    auto tri = hull2d({pt2(0, 0), pt2(1, 0), pt2(0, 1)});
    REQUIRE(tri.size() == 3);
    CHECK(tri[0] == pt2(0, 0));
    CHECK(tri[1] == pt2(1, 0));
    CHECK(tri[2] == pt2(0, 1));

    auto collinear = hull2d(
        {pt2(0, 0), Point(make_rational(1, 2), make_rational(1, 2)), pt2(1, 1)});
    REQUIRE(collinear.size() == 2);
    CHECK(collinear[0] == pt2(0, 0));
    CHECK(collinear[1] == pt2(1, 1));

    // The level-3 candidate point set: three vertices.
    CHECK(hull2d({pt2(1, 0), pt2(0, 0), pt2(0, 1)}).size() == 3);

    CHECK(hull2d({pt2(5, 5)}).size() == 1);
    CHECK(hull2d({pt2(5, 5), pt2(5, 5)}).size() == 1);
    CHECK_THROWS_AS(hull2d({}), std::invalid_argument);
    CHECK_THROWS_AS(hull2d({Point({Rational(1)})}), std::invalid_argument);
}

TEST_CASE("hull2d invariant under permutation and duplication") {
    std::mt19937_64 rng(7151);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Point> pts;
        std::uniform_int_distribution<int> count(3, 12);
        int n = count(rng);
        for (int i = 0; i < n; ++i)
            pts.emplace_back(exkn::testing::random_unit_rational(rng, 8),
                             exkn::testing::random_unit_rational(rng, 8));
        auto reference = hull2d(pts);

        std::vector<Point> shuffled = pts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(pts[0]);
        shuffled.push_back(pts[n / 2]);
        CHECK(hull2d(shuffled) == reference);
    }
}

TEST_CASE("lp_feasible basics and certificates") {
    auto feas = lp_feasible({{Rational(1)}}, {Rational(1)});
    CHECK(feas.feasible);
    REQUIRE(feas.witness.size() == 1);
    CHECK(feas.witness[0] == 1);

    auto infeas = lp_feasible({{Rational(1)}, {Rational(-1)}},
                              {Rational(1), Rational(1)});
    CHECK_FALSE(infeas.feasible);
    CHECK(infeas.farkas.size() == 2);  // certificate verified inside lp_feasible

    CHECK_THROWS_AS(lp_feasible({{Rational(1)}}, {Rational(1), Rational(2)}),
                    std::invalid_argument);
}

TEST_CASE("lp_feasible on random systems") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4), var(1, 6), coef(-5, 5);
        size_t m = static_cast<size_t>(dim(rng)), n = static_cast<size_t>(var(rng));
        std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
        for (auto& row : A)
            for (auto& v : row) v = coef(rng);
        std::vector<Rational> b(m);
        for (auto& v : b) v = coef(rng);
        // lp_feasible re-verifies its own witness/certificate and throws on
        // any mismatch, so surviving the call is the assertion.
        CHECK_NOTHROW(lp_feasible(A, b));
    }
}

TEST_CASE("is_extreme_point basics") {
    CHECK(is_extreme_point(pt2(0, 0), {pt2(1, 0), pt2(0, 1)}));
    CHECK_FALSE(is_extreme_point(
        Point(make_rational(1, 2), make_rational(1, 2)), {pt2(0, 0), pt2(1, 1)}));
    CHECK(is_extreme_point(pt2(3, 4), {}));
}

TEST_CASE("v_{4,3} is extreme among the truncated family") {
    std::vector<Point> others;
    for (unsigned m = 1; m <= 30; ++m)
        if (m != 3) others.push_back(v_nm(4, m).as_point());
    others.push_back(v_nm_infinity(4).as_point());
    CHECK(is_extreme_point(v_nm(4, 3).as_point(), others));
}

TEST_CASE("convex-combination system for v_{3,2} is infeasible") {
    std::vector<Point> others;
    for (unsigned m = 1; m <= 30; ++m)
        if (m != 2) others.push_back(v_nm(3, m).as_point());
    others.push_back(v_nm_infinity(3).as_point());
    CHECK_FALSE(in_convex_hull(v_nm(3, 2).as_point(), others));
}

TEST_CASE("segment midpoints are never extreme") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 5; ++i)
            pts.emplace_back(exkn::testing::random_unit_rational(rng, 9),
                             exkn::testing::random_unit_rational(rng, 9));
        Rational t = exkn::testing::random_unit_rational(rng, 11);
        if (t == 1) t = make_rational(1, 2);
        Point mix(t * pts[0][0] + (1 - t) * pts[1][0],
                  t * pts[0][1] + (1 - t) * pts[1][1]);
        CHECK_FALSE(is_extreme_point(mix, pts));
    }
}
