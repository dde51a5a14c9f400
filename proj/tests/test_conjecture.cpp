#include <doctest.h>

#include <random>

#include "exkn/conjecture.hpp"
#include "exkn/k3_region.hpp"
#include "test_util.hpp"

using namespace exkn;

TEST_CASE("v_nm pinned values") {
    auto v32 = v_nm(3, 2);
    CHECK(v32.law.probs ==
          std::vector<Rational>{make_rational(1, 4), make_rational(3, 4), Rational(0)});

    auto v33 = v_nm(3, 3);
    CHECK(v33.law.probs == std::vector<Rational>{make_rational(1, 9),
                                                 make_rational(2, 3),
                                                 make_rational(2, 9)});

    auto v41 = v_nm(4, 1);
    CHECK(v41.law.probs ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});

    auto vinf = v_nm_infinity(4);
    CHECK(vinf.law.probs ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK_FALSE(vinf.m.has_value());

    CHECK_THROWS_AS(v_nm(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(v_nm(3, 0), std::invalid_argument);
}

TEST_CASE("v_nm coincides with the uniform paintbox law") {
    for (int n = 2; n <= 6; ++n)
        for (unsigned m = 1; m <= 9; ++m)
            CHECK(v_nm(n, m).law == law_of_kn(RankedDiscreteDistribution::uniform(m), n));
}

TEST_CASE("v_nm rows sum to one and converge to the diffuse limit") {
    for (int n = 2; n <= 8; ++n)
        for (unsigned m : {1u, 2u, 7u, 25u, 60u}) {
            auto v = v_nm(n, m);
            Rational total = 0;
            for (const auto& q : v.law.probs) total += q;
            CHECK(total == 1);
            // All mass on k <= min(n, m).
            for (int k = static_cast<int>(m) + 1; k <= n; ++k)
                CHECK(v.law.at(k) == 0);
        }
    // P(K_n = n) = (m)_n / m^n increases with m toward 1.
    for (unsigned m = 4; m <= 40; ++m)
        CHECK(v_nm(5, m).law.at(5) < v_nm(5, m + 1).law.at(5));
}

TEST_CASE("verify_extremes for n=3") {
    auto report = verify_extremes(3, 12);
    CHECK(report.n == 3);
    CHECK(report.m_max == 12);
    REQUIRE(report.verdicts.size() == 12);
    CHECK(report.all_extreme);
    for (const auto& v : report.verdicts) CHECK(v.extreme);
    CHECK(report.seconds >= 0.0);
}

TEST_CASE("verify_extremes for n=4 and n=5 on a short range") {
    for (int n : {4, 5}) {
        auto report = verify_extremes(n, 8);
        CHECK(report.all_extreme);
    }
    CHECK_THROWS_AS(verify_extremes(9, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_extremes(3, 0), std::invalid_argument);
}

TEST_CASE("hull membership of family members and their mixtures") {
    std::mt19937_64 rng(321123);
    std::uniform_int_distribution<unsigned> pick(1, 10);
    for (int n : {3, 4, 5}) {
        for (unsigned m = 1; m <= 10; ++m)
            CHECK(hull_membership(v_nm(n, m).law, n, 12));
        CHECK(hull_membership(v_nm_infinity(n).law, n, 12));

        for (int trial = 0; trial < 20; ++trial) {
            auto a = v_nm(n, pick(rng)).law;
            auto b = trial % 4 == 0 ? v_nm_infinity(n).law : v_nm(n, pick(rng)).law;
            Rational t = exkn::testing::random_unit_rational(rng, 23);
            std::vector<Rational> probs(static_cast<size_t>(n));
            for (size_t k = 0; k < probs.size(); ++k)
                probs[k] = t * a.probs[k] + (1 - t) * b.probs[k];
            CHECK(hull_membership(LawOfK(n, std::move(probs)), n, 12));
        }
    }
}

TEST_CASE("hull membership rejects unachievable laws") {
    // All mass on exactly two values is impossible for exchangeable K_3.
    CHECK_FALSE(hull_membership(LawOfK(3, {Rational(0), Rational(1), Rational(0)}), 3, 40));
    // Matches the closed-form region test for n = 3.
    std::mt19937_64 rng(77077);
    for (int trial = 0; trial < 30; ++trial) {
        Rational q1 = exkn::testing::random_unit_rational(rng, 16);
        Rational q3 = exkn::testing::random_unit_rational(rng, 16);
        if (q1 + q3 > 1) continue;
        if (q1 > 0 && q1 < make_rational(1, 1600)) continue;  // beyond truncation
        LawOfK law(3, {q1, 1 - q1 - q3, q3});
        CHECK(hull_membership(law, 3, 40) == contains({q1, q3}));
    }
}
