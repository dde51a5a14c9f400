#pragma once

#include <vector>

#include "exkn/rational.hpp"

namespace exkn {

// Point in Q^d; the dimension is fixed at construction.
struct Point {
    std::vector<Rational> coords;

    Point() = default;
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
    Point(Rational x, Rational y) : coords{std::move(x), std::move(y)} {}

    size_t dim() const { return coords.size(); }
    const Rational& operator[](size_t i) const { return coords[i]; }

    bool operator==(const Point& o) const { return coords == o.coords; }
    bool operator<(const Point& o) const { return coords < o.coords; }
};

// Result of an exact LP feasibility query for {x >= 0 : A x = b}.
// Exactly one of witness / farkas is populated; both are re-verified by
// substitution before lp_feasible returns.
struct LpResult {
    bool feasible = false;
    std::vector<Rational> witness;  // x with A x = b, x >= 0
    std::vector<Rational> farkas;   // y with y^T A <= 0, y^T b > 0
};

// Phase-1 primal simplex with Bland's rule over exact rationals.
LpResult lp_feasible(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b);

// Extreme points of the convex hull of a 2D point set, counterclockwise,
// starting from the lexicographically smallest vertex. Collinear boundary
// points are excluded. Exact cross-product predicates throughout.
std::vector<Point> hull2d(const std::vector<Point>& points);

// True iff x is not a convex combination of the given points.
bool is_extreme_point(const Point& x, const std::vector<Point>& others);

// True iff x lies in the convex hull of the given points (exact LP).
bool in_convex_hull(const Point& x, const std::vector<Point>& points);

}  // namespace exkn
