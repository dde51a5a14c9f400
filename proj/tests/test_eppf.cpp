#include <doctest.h>

#include <algorithm>
#include <random>

#include "exkn/eppf.hpp"
#include "exkn/geometry.hpp"
#include "test_util.hpp"

using namespace exkn;

namespace {

// Paintbox EPPF tabulated over all partitions of m.
EppfTable paintbox_table(const RankedDiscreteDistribution& p, unsigned m) {
    EppfTable table;
    table.m = m;
    for (const auto& lambda : partitions_of(m)) {
        Rational v = paintbox_eppf(p, lambda);
        if (v != 0) table.values[lambda] = v;
    }
    return table;
}

}  // namespace

TEST_CASE("EppfTable validation") {
    EppfTable good;
    good.m = 2;
    good.values[IntegerPartition({2})] = make_rational(1, 4);
    good.values[IntegerPartition({1, 1})] = make_rational(3, 4);
    CHECK_NOTHROW(good.validate());

    EppfTable bad = good;
    bad.values[IntegerPartition({2})] = make_rational(1, 2);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    EppfTable mismatch;
    mismatch.m = 3;
    mismatch.values[IntegerPartition({2})] = Rational(1);
    CHECK_THROWS_AS(mismatch.validate(), std::invalid_argument);
}

TEST_CASE("expand_coefficients base level is the cluster-count table") {
    for (int n = 3; n <= 6; ++n) {
        auto cm = expand_coefficients(n, static_cast<unsigned>(n));
        CHECK(cm.entries.size() == partitions_of(static_cast<unsigned>(n)).size());
        for (const auto& [lambda, coeffs] : cm.entries) {
            for (int k = 1; k <= n; ++k) {
                Integer expected =
                    lambda.length() == static_cast<size_t>(k) ? cluster_count(lambda) : 0;
                CHECK(coeffs[static_cast<size_t>(k - 1)] == expected);
            }
        }
    }
    CHECK_THROWS_AS(expand_coefficients(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(expand_coefficients(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(expand_coefficients(3, 46), std::invalid_argument);
}

TEST_CASE("coefficient rows sum to the cluster count at every level") {
    for (int n : {3, 4, 5}) {
        auto cm = expand_coefficients(n, static_cast<unsigned>(n));
        for (unsigned m = static_cast<unsigned>(n); m <= 10; ++m) {
            CHECK(cm.m == m);
            for (const auto& [lambda, coeffs] : cm.entries) {
                Integer row_sum = 0;
                for (const auto& c : coeffs) {
                    CHECK(c >= 0);
                    row_sum += c;
                }
                CHECK(row_sum == cluster_count(lambda));
            }
            cm = expand_one_level(cm);
        }
    }
}

TEST_CASE("law_from_eppf agrees with the paintbox law across levels") {
    std::mt19937_64 rng(606060);
    for (int trial = 0; trial < 8; ++trial) {
        auto p = exkn::testing::random_paintbox(rng, 4, trial % 2 == 0);
        for (unsigned m = 5; m <= 6; ++m) {
            auto table = paintbox_table(p, m);
            for (int n = 3; n <= static_cast<int>(m); ++n)
                CHECK(law_from_eppf(table, n) == law_of_kn(p, n));
        }
    }
    // Uniform u_3 at level 5, pinned.
    auto table = paintbox_table(RankedDiscreteDistribution::uniform(3), 5);
    auto law = law_from_eppf(table, 3);
    CHECK(law.probs == std::vector<Rational>{make_rational(1, 9), make_rational(2, 3),
                                             make_rational(2, 9)});
}

TEST_CASE("eppf_for_target_law matches the worked tables") {
    auto trivial = eppf_for_target_law(LawOfK(3, {Rational(0), Rational(0), Rational(1)}));
    CHECK(trivial.values ==
          std::map<IntegerPartition, Rational>{{IntegerPartition({1, 1, 1}), Rational(1)}});

    auto mid = eppf_for_target_law(LawOfK(3, {Rational(0), Rational(1), Rational(0)}));
    CHECK(mid.values == std::map<IntegerPartition, Rational>{
                            {IntegerPartition({2, 1}), make_rational(1, 3)}});

    auto quarter = eppf_for_target_law(LawOfK(
        4, {make_rational(1, 4), make_rational(1, 4), make_rational(1, 4),
            make_rational(1, 4)}));
    CHECK(quarter.value(IntegerPartition({4})) == make_rational(1, 4));
    CHECK(quarter.value(IntegerPartition({3, 1})) == make_rational(1, 16));
    CHECK(quarter.value(IntegerPartition({2, 1, 1})) == make_rational(1, 24));
    CHECK(quarter.value(IntegerPartition({1, 1, 1, 1})) == make_rational(1, 4));
}

TEST_CASE("eppf_for_target_law round-trips through law_from_eppf") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> n_dist(3, 7);
        int n = n_dist(rng);
        // Random probability vector with small denominators.
        std::uniform_int_distribution<long> w_dist(0, 9);
        std::vector<Rational> probs(static_cast<size_t>(n));
        Rational total = 0;
        for (auto& q : probs) {
            q = w_dist(rng);
            total += q;
        }
        if (total == 0) probs[0] = total = 1;
        for (auto& q : probs) q /= total;
        LawOfK a(n, probs);
        CHECK(law_from_eppf(eppf_for_target_law(a), n) == a);
    }
}

TEST_CASE("achievable_k3_region extreme-point counts") {
    // Counts of strict extreme points for levels 3..10.
    const std::vector<size_t> expected{3, 3, 4, 4, 5, 5, 6, 6};
    for (unsigned m = 3; m <= 10; ++m) {
        auto region = achievable_k3_region(m);
        CHECK(region.m == m);
        CHECK(region.points.size() == partitions_of(m).size());
        CHECK(region.hull.size() == expected[m - 3]);
        // Hull vertices are drawn from the candidate points.
        for (const auto& v : region.hull)
            CHECK(std::count(region.points.begin(), region.points.end(), v) >= 1);
    }
    CHECK_THROWS_AS(achievable_k3_region(2), std::invalid_argument);
}

TEST_CASE("achievable regions are nested downward in the level") {
    auto inside = [](const K3Point& pt, const std::vector<K3Point>& hull) {
        std::vector<Point> poly;
        for (const auto& v : hull) poly.emplace_back(v.q1, v.q3);
        return in_convex_hull(Point(pt.q1, pt.q3), poly);
    };
    auto prev = achievable_k3_region(3);
    for (unsigned m = 4; m <= 9; ++m) {
        auto cur = achievable_k3_region(m);
        for (const auto& v : cur.hull) CHECK(inside(v, prev.hull));
        prev = cur;
    }
    // The paintbox vertices always remain achievable.
    for (unsigned N = 1; N <= 3; ++N) {
        auto v = v_point(N);
        CHECK(inside({v.q1, v.q3}, prev.hull));
    }
}

TEST_CASE("sharp_bound_kn pinned values") {
    CHECK(sharp_bound_kn(3).value == 1);
    CHECK(sharp_bound_kn(4).value == make_rational(4, 5));
    CHECK(sharp_bound_kn(5).value == make_rational(2, 3));
    CHECK(sharp_bound_kn(6).value == make_rational(5, 7));
    CHECK(sharp_bound_kn(7).value == make_rational(3, 4));
    for (int n = 3; n <= 12; ++n) {
        long num = std::max(4L, static_cast<long>(n) - 1);
        CHECK(sharp_bound_kn(n).value == make_rational(num, n + 1));
    }
    CHECK_THROWS_AS(sharp_bound_kn(2), std::invalid_argument);
}

TEST_CASE("sharp bound is attained by its witness partition") {
    for (int n = 3; n <= 8; ++n) {
        auto bound = sharp_bound_kn(n);
        EppfTable table;
        table.m = static_cast<unsigned>(n) + 1;
        table.values[bound.achieved_by] =
            Rational(1) / Rational(cluster_count(bound.achieved_by));
        CHECK(law_from_eppf(table, n).at(n - 1) == bound.value);
    }
}
