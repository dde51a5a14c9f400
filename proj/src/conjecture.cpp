#include "exkn/conjecture.hpp"

#include <chrono>
#include <stdexcept>

#include "exkn/combinatorics.hpp"

namespace exkn {

VnmVector v_nm(int n, unsigned m) {
    if (n < 2 || n > 12)
        throw std::invalid_argument("v_nm: n out of range");
    if (m < 1) throw std::invalid_argument("v_nm: m must be positive");
    Integer mn = pow_integer(m, static_cast<unsigned long>(n));
    std::vector<Rational> probs;
    probs.reserve(n);
    for (int k = 1; k <= n; ++k) {
        Rational q(stirling2(n, k) * falling_factorial(m, k), mn);
        q.canonicalize();
        probs.push_back(q);
    }
    return {n, m, LawOfK(n, std::move(probs))};
}

VnmVector v_nm_infinity(int n) {
    if (n < 2 || n > 12)
        throw std::invalid_argument("v_nm_infinity: n out of range");
    std::vector<Rational> probs(n, 0);
    probs.back() = 1;
    return {n, std::nullopt, LawOfK(n, std::move(probs))};
}

ExtremeReport verify_extremes(int n, unsigned m_max) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("verify_extremes: n out of range");
    if (m_max < 1 || m_max > 60)
        throw std::invalid_argument("verify_extremes: m_max out of range");
    auto start = std::chrono::steady_clock::now();

    std::vector<Point> family;
    family.reserve(m_max + 1);
    for (unsigned m = 1; m <= m_max; ++m) family.push_back(v_nm(n, m).as_point());
    Point infinity = v_nm_infinity(n).as_point();

    ExtremeReport report;
    report.n = n;
    report.m_max = m_max;
    for (unsigned m = 1; m <= m_max; ++m) {
        std::vector<Point> others;
        others.reserve(m_max);
        for (unsigned j = 1; j <= m_max; ++j)
            if (j != m) others.push_back(family[j - 1]);
        others.push_back(infinity);
        bool extreme = is_extreme_point(family[m - 1], others);
        report.verdicts.push_back({m, extreme});
        if (!extreme) report.all_extreme = false;
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool hull_membership(const LawOfK& law, int n, unsigned m_max) {
    if (law.n != n)
        throw std::invalid_argument("hull_membership: law length mismatch");
    if (m_max < 1 || m_max > 60)
        throw std::invalid_argument("hull_membership: m_max out of range");
    std::vector<Point> family;
    for (unsigned m = 1; m <= m_max; ++m) family.push_back(v_nm(n, m).as_point());
    family.push_back(v_nm_infinity(n).as_point());
    return in_convex_hull(Point(law.probs), family);
}

}  // namespace exkn
