#pragma once

#include <optional>

#include "exkn/paintbox.hpp"
#include "exkn/rational.hpp"

namespace exkn {

// Law of K_3 in the (q1, q3) = (P(K_3=1), P(K_3=3)) parameterization.
struct K3Point {
    Rational q1;
    Rational q3;

    bool operator==(const K3Point& o) const { return q1 == o.q1 && q3 == o.q3; }
};

// Vertex v_N = (1/N^2, (N-1)(N-2)/N^2) of the achievable region.
K3Point v_point(unsigned N);
// The limit vertex (0, 1).
K3Point v_point_infinity();

// Slope of the segment joining v_N and v_{N+1}: -(N-1)(3N+2)/(2N+1).
Rational segment_slope(unsigned N);

// Result of the membership test, with the active constraint for reporting.
struct RegionCheck {
    bool inside = false;
    // Segment indices N whose line constraint brackets q1 (two at a vertex
    // abscissa); empty when rejection came from the box/edge constraints.
    std::vector<unsigned> segments;
    std::string reason;  // populated on rejection
};

// Exact membership in conv(V_3), checking only the bracketing segment(s).
RegionCheck region_check(const K3Point& pt);
bool contains(const K3Point& pt);

// 1 - 2^{1-n}, the sharp upper bound on P(K_n = 2); n >= 3.
Rational bound_q2_max(int n);

// Checks Q(lambda u_N + (1-lambda) u_{2N}) = lambda^2 Q(u_N) + (1-lambda^2) Q(u_{2N}).
bool mixture_identity_check(unsigned N, const Rational& lambda);

}  // namespace exkn
