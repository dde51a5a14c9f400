#include "exkn/eppf.hpp"

#include <algorithm>
#include <stdexcept>

#include "exkn/geometry.hpp"

namespace exkn {

void EppfTable::validate() const {
    if (m < 1) throw std::invalid_argument("EppfTable: level must be positive");
    Rational total = 0;
    for (const auto& [lambda, v] : values) {
        if (lambda.level() != m)
            throw std::invalid_argument("EppfTable: partition level mismatch");
        if (v < 0) throw std::invalid_argument("EppfTable: negative value");
        total += Rational(cluster_count(lambda)) * v;
    }
    if (total != 1)
        throw std::invalid_argument("EppfTable: total probability is not 1");
}

namespace {

// Partition with one occurrence of part j replaced by j+1, kept sorted.
IntegerPartition bump_part(const IntegerPartition& mu, unsigned j) {
    std::vector<unsigned> parts = mu.parts;
    auto it = std::find(parts.begin(), parts.end(), j);
    *it = j + 1;
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
    return IntegerPartition(std::move(parts));
}

IntegerPartition append_singleton(const IntegerPartition& mu) {
    std::vector<unsigned> parts = mu.parts;
    parts.push_back(1);
    return IntegerPartition(std::move(parts));
}

void accumulate(std::map<IntegerPartition, std::vector<Integer>>& dst,
                const IntegerPartition& key, const std::vector<Integer>& coeffs,
                const Integer& factor) {
    auto& cell = dst[key];
    if (cell.empty()) cell.assign(coeffs.size(), 0);
    for (size_t i = 0; i < coeffs.size(); ++i) cell[i] += factor * coeffs[i];
}

}  // namespace

CoefficientMatrix expand_one_level(const CoefficientMatrix& cm) {
    CoefficientMatrix next;
    next.n = cm.n;
    next.m = cm.m + 1;
    for (const auto& [mu, coeffs] : cm.entries) {
        accumulate(next.entries, append_singleton(mu), coeffs, 1);
        // Distinct part values of mu with their multiplicities.
        size_t i = 0;
        while (i < mu.parts.size()) {
            unsigned j = mu.parts[i];
            unsigned mult = 0;
            while (i < mu.parts.size() && mu.parts[i] == j) {
                ++mult;
                ++i;
            }
            accumulate(next.entries, bump_part(mu, j), coeffs, mult);
        }
    }
    return next;
}

CoefficientMatrix expand_coefficients(int n, unsigned m) {
    if (n < 3 || static_cast<unsigned>(n) > m || m > kMaxExpandLevel)
        throw std::invalid_argument("expand_coefficients: require 3 <= n <= m <= 45");
    CoefficientMatrix cm;
    cm.n = n;
    cm.m = static_cast<unsigned>(n);
    for (const auto& lambda : partitions_of(static_cast<unsigned>(n))) {
        std::vector<Integer> coeffs(n, 0);
        coeffs[lambda.length() - 1] = cluster_count(lambda);
        cm.entries.emplace(lambda, std::move(coeffs));
    }
    while (cm.m < m) cm = expand_one_level(cm);
    return cm;
}

LawOfK law_from_eppf(const EppfTable& table, int n) {
    table.validate();
    if (n < 1 || static_cast<unsigned>(n) > table.m)
        throw std::invalid_argument("law_from_eppf: n out of range");
    if (n < 3) {
        // Below the coefficient engine's range; n = 1, 2 handled directly.
        // P(K_1=1)=1; P(K_2=1)=p(2) expanded to level m is covered by n>=3 in
        // practice, so restrict to the supported range.
        throw std::invalid_argument("law_from_eppf: n must be >= 3");
    }
    CoefficientMatrix cm = expand_coefficients(n, table.m);
    std::vector<Rational> probs(n, 0);
    for (const auto& [lambda, coeffs] : cm.entries) {
        Rational v = table.value(lambda);
        if (v == 0) continue;
        for (int k = 1; k <= n; ++k) probs[k - 1] += Rational(coeffs[k - 1]) * v;
    }
    return LawOfK(n, std::move(probs));
}

K3Region achievable_k3_region(unsigned m) {
    if (m < 3 || m > kMaxExpandLevel)
        throw std::invalid_argument("achievable_k3_region: require 3 <= m <= 45");
    CoefficientMatrix cm = expand_coefficients(3, m);
    K3Region region;
    region.m = m;
    std::vector<Point> pts;
    pts.reserve(cm.entries.size());
    for (const auto& [lambda, coeffs] : cm.entries) {
        Rational c(cluster_count(lambda));
        K3Point kp{Rational(coeffs[0]) / c, Rational(coeffs[2]) / c};
        region.points.push_back(kp);
        pts.emplace_back(kp.q1, kp.q3);
    }
    for (const auto& v : hull2d(pts)) region.hull.push_back({v[0], v[1]});
    return region;
}

SharpBound sharp_bound_kn(int n) {
    if (n < 3 || n > 20)
        throw std::invalid_argument("sharp_bound_kn: require 3 <= n <= 20");
    // The constraint sum C(lambda) p(lambda) <= 1 with a nonnegative linear
    // objective puts the optimum at a single partition: the max ratio
    // coefficient/C(lambda) over partitions of n+1.
    CoefficientMatrix cm = expand_coefficients(n, static_cast<unsigned>(n) + 1);
    SharpBound best{Rational(0), IntegerPartition({static_cast<unsigned>(n) + 1})};
    bool first = true;
    for (const auto& [lambda, coeffs] : cm.entries) {
        Rational ratio = Rational(coeffs[n - 2]) / Rational(cluster_count(lambda));
        if (first || ratio > best.value) {
            best = {ratio, lambda};
            first = false;
        }
    }
    return best;
}

EppfTable eppf_for_target_law(const LawOfK& a) {
    const int n = a.n;
    EppfTable table;
    table.m = static_cast<unsigned>(n);
    for (int k = 1; k <= n; ++k) {
        if (a.at(k) == 0) continue;
        std::vector<unsigned> parts{static_cast<unsigned>(n - k + 1)};
        parts.insert(parts.end(), static_cast<size_t>(k - 1), 1u);
        std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
        IntegerPartition lambda(std::move(parts));
        // cluster_count(lambda) = binom(n, k-1) for k < n and 1 for k = n.
        Rational v = a.at(k) / Rational(cluster_count(lambda));
        table.values[lambda] = v;
    }
    table.validate();
    return table;
}

}  // namespace exkn
