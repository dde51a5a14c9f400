#pragma once

#include <map>
#include <vector>

#include "exkn/combinatorics.hpp"
#include "exkn/k3_region.hpp"
#include "exkn/paintbox.hpp"

namespace exkn {

// EPPF of an exchangeable random partition of [m], keyed on sorted block-size
// partitions. Valid when all values are >= 0 and
// sum_lambda cluster_count(lambda) * values[lambda] = 1.
struct EppfTable {
    unsigned m = 0;
    std::map<IntegerPartition, Rational> values;

    Rational value(const IntegerPartition& lambda) const {
        auto it = values.find(lambda);
        return it == values.end() ? Rational(0) : it->second;
    }
    void validate() const;
};

// Coefficients of the expansion P(K_n = k) = sum_lambda entries[k][lambda] p(lambda)
// over partitions lambda of m, valid for every EPPF at level m.
struct CoefficientMatrix {
    int n = 0;
    unsigned m = 0;
    // partition of m -> per-k coefficients (index k-1, k = 1..n)
    std::map<IntegerPartition, std::vector<Integer>> entries;
};

inline constexpr unsigned kMaxExpandLevel = 45;

// Level-n cluster-count coefficients pushed up to level m through the EPPF
// consistency relation, one level at a time.
CoefficientMatrix expand_coefficients(int n, unsigned m);

// Single expansion step m -> m+1 (exposed for incremental sweeps).
CoefficientMatrix expand_one_level(const CoefficientMatrix& cm);

// Law of K_n implied by an EPPF table at level m >= n.
LawOfK law_from_eppf(const EppfTable& table, int n);

// Achievable (q1, q3) region for K_3 of exchangeable partitions of [m]:
// the candidate points (A(lambda)/C(lambda), B(lambda)/C(lambda)) and the
// extreme points of their convex hull.
struct K3Region {
    unsigned m = 0;
    std::vector<K3Point> points;
    std::vector<K3Point> hull;  // CCW, strict extreme points only
};

K3Region achievable_k3_region(unsigned m);

// Sharp bound on P(K_n(Pi_{n+1}) = n-1), with the partition achieving it.
struct SharpBound {
    Rational value;
    IntegerPartition achieved_by;  // partition of n+1 maximizing the ratio
};

SharpBound sharp_bound_kn(int n);

// EPPF at level n realizing an arbitrary target law of K_n:
// p(n-k+1, 1^{k-1}) = a_k / C(n-k+1, 1^{k-1}), all other partitions zero.
// The divisor is binom(n, k-1) for k < n and 1 for k = n.
EppfTable eppf_for_target_law(const LawOfK& a);

}  // namespace exkn
