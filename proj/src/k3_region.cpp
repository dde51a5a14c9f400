#include "exkn/k3_region.hpp"

#include <stdexcept>

namespace exkn {

K3Point v_point(unsigned N) {
    if (N < 1) throw std::invalid_argument("v_point: N must be positive");
    long n = static_cast<long>(N);
    Rational q3((n - 1) * (n - 2), n * n);
    q3.canonicalize();
    return {Rational(1, n * n), q3};
}

K3Point v_point_infinity() { return {Rational(0), Rational(1)}; }

Rational segment_slope(unsigned N) {
    if (N < 1) throw std::invalid_argument("segment_slope: N must be positive");
    long n = static_cast<long>(N);
    Rational s(-(n - 1) * (3 * n + 2), 2 * n + 1);
    s.canonicalize();
    return s;
}

namespace {

// Line constraint of the segment joining v_N and v_{N+1}:
// q3 + (N-1)(3N+2)/(2N+1) q1 >= (2N-2)/(2N+1). Trivial for N = 1.
bool on_or_above_segment(const K3Point& pt, unsigned N) {
    if (N <= 1) return pt.q3 >= 0;
    long n = static_cast<long>(N);
    Rational rhs(2 * n - 2, 2 * n + 1);
    rhs.canonicalize();
    return pt.q3 - segment_slope(N) * pt.q1 >= rhs;
}

}  // namespace

RegionCheck region_check(const K3Point& pt) {
    RegionCheck res;
    if (pt.q1 < 0 || pt.q1 > 1 || pt.q3 < 0) {
        res.reason = "outside the unit box";
        return res;
    }
    if (pt.q1 + pt.q3 > 1) {
        res.reason = "above the upper edge q1 + q3 = 1";
        return res;
    }
    if (pt.q1 == 0) {
        if (pt.q3 == 1) {
            res.inside = true;
            res.reason = "vertex v_infinity";
        } else {
            res.reason = "on q1 = 0 only (0,1) is achievable";
        }
        return res;
    }
    // Bracket: N with 1/(N+1)^2 <= q1 <= 1/N^2, via exact integer sqrt.
    Integer floor_recip = pt.q1.get_den() / pt.q1.get_num();
    Integer N_big = isqrt_floor(floor_recip);
    unsigned N = static_cast<unsigned>(N_big.get_ui());
    if (N < 1) N = 1;

    res.segments.push_back(N);
    // At a vertex abscissa both adjacent segments are checked.
    bool at_vertex = pt.q1 * Rational(static_cast<long>(N) * N) == 1;
    if (at_vertex && N >= 2) res.segments.push_back(N - 1);

    for (unsigned seg : res.segments) {
        if (!on_or_above_segment(pt, seg)) {
            res.reason = "below segment N=" + std::to_string(seg);
            return res;
        }
    }
    res.inside = true;
    return res;
}

bool contains(const K3Point& pt) { return region_check(pt).inside; }

Rational bound_q2_max(int n) {
    if (n < 3) throw std::invalid_argument("bound_q2_max: n must be >= 3");
    return 1 - Rational(Integer(1), pow_integer(2, static_cast<unsigned long>(n - 1)));
}

bool mixture_identity_check(unsigned N, const Rational& lambda) {
    if (N < 1) throw std::invalid_argument("mixture_identity_check: N must be positive");
    if (lambda < 0 || lambda > 1)
        throw std::invalid_argument("mixture_identity_check: lambda outside [0,1]");
    long n = static_cast<long>(N);
    std::vector<Rational> atoms;
    for (unsigned i = 0; i < N; ++i) atoms.push_back((1 + lambda) / (2 * n));
    for (unsigned i = 0; i < N; ++i) atoms.push_back((1 - lambda) / (2 * n));
    auto mix = q3_closed(RankedDiscreteDistribution(std::move(atoms)));
    auto qN = q3_closed(RankedDiscreteDistribution::uniform(N));
    auto q2N = q3_closed(RankedDiscreteDistribution::uniform(2 * N));
    Rational l2 = lambda * lambda;
    return mix[0] == l2 * qN[0] + (1 - l2) * q2N[0] &&
           mix[2] == l2 * qN[2] + (1 - l2) * q2N[2];
}

}  // namespace exkn
