#include "exkn/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace exkn {

namespace {

// Sign of the cross product (a - o) x (b - o).
int orientation(const Point& o, const Point& a, const Point& b) {
    Rational cross = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    return sgn(cross);
}

}  // namespace

LpResult lp_feasible(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b) {
    const size_t m = A.size();
    if (m != b.size())
        throw std::invalid_argument("lp_feasible: row count mismatch");
    const size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != n)
            throw std::invalid_argument("lp_feasible: ragged matrix");

    // Normalize to b >= 0, remembering flipped rows.
    std::vector<std::vector<Rational>> rows(m);
    std::vector<Rational> rhs(m);
    std::vector<bool> flipped(m, false);
    for (size_t i = 0; i < m; ++i) {
        rows[i] = A[i];
        rhs[i] = b[i];
        if (rhs[i] < 0) {
            flipped[i] = true;
            for (auto& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
        }
    }

    // Phase-1 tableau: columns [x_0..x_{n-1} | s_0..s_{m-1} | rhs], basis = artificials.
    const size_t ncols = n + m;
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(ncols + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) tab[i][j] = rows[i][j];
        tab[i][n + i] = 1;
        tab[i][ncols] = rhs[i];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced-cost row for minimizing the sum of artificials:
    // cbar_j = c_j - sum_i tab[i][j]; objective value tracked in obj[ncols] (negated sum).
    std::vector<Rational> obj(ncols + 1, 0);
    for (size_t j = 0; j <= ncols; ++j) {
        Rational s = 0;
        for (size_t i = 0; i < m; ++i) s += tab[i][j];
        Rational c = (j >= n && j < ncols) ? Rational(1) : Rational(0);
        obj[j] = c - s;
    }

    while (true) {
        // Bland: entering = smallest column index with negative reduced cost.
        size_t enter = ncols;
        for (size_t j = 0; j < ncols; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == ncols) break;  // optimal

        // Ratio test; Bland tie-break on smallest basis variable index.
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][ncols] / tab[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            throw std::logic_error("lp_feasible: phase-1 unbounded (cannot happen)");

        // Pivot on (leave, enter).
        Rational piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (size_t j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (obj[enter] != 0) {
            Rational f = obj[enter];
            for (size_t j = 0; j <= ncols; ++j) obj[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    // Optimal phase-1 value = -obj[ncols].
    Rational z = -obj[ncols];
    LpResult res;
    if (z == 0) {
        res.feasible = true;
        res.witness.assign(n, 0);
        for (size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.witness[basis[i]] = tab[i][ncols];
        // Re-verify A x = b, x >= 0.
        for (const auto& v : res.witness)
            if (v < 0) throw std::logic_error("lp_feasible: negative witness entry");
        for (size_t i = 0; i < m; ++i) {
            Rational s = 0;
            for (size_t j = 0; j < n; ++j) s += A[i][j] * res.witness[j];
            if (s != b[i]) throw std::logic_error("lp_feasible: witness fails A x = b");
        }
    } else {
        res.feasible = false;
        // Dual of phase-1: y_i = 1 - cbar(artificial i), then undo row flips.
        res.farkas.assign(m, 0);
        for (size_t i = 0; i < m; ++i) {
            Rational y = Rational(1) - obj[n + i];
            res.farkas[i] = flipped[i] ? -y : y;
        }
        // Re-verify y^T A <= 0 and y^T b > 0.
        for (size_t j = 0; j < n; ++j) {
            Rational s = 0;
            for (size_t i = 0; i < m; ++i) s += res.farkas[i] * A[i][j];
            if (s > 0) throw std::logic_error("lp_feasible: Farkas fails y^T A <= 0");
        }
        Rational yb = 0;
        for (size_t i = 0; i < m; ++i) yb += res.farkas[i] * b[i];
        if (yb <= 0) throw std::logic_error("lp_feasible: Farkas fails y^T b > 0");
    }
    return res;
}

std::vector<Point> hull2d(const std::vector<Point>& points) {
    if (points.empty())
        throw std::invalid_argument("hull2d: empty point set");
    for (const auto& p : points)
        if (p.dim() != 2)
            throw std::invalid_argument("hull2d: points must be 2-dimensional");

    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;

    // Monotone chain; strict left turns only, so collinear points are dropped.
    std::vector<Point> hull;
    hull.reserve(2 * n);
    for (const auto& p : pts) {
        while (hull.size() >= 2 &&
               orientation(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    size_t lower = hull.size() + 1;
    for (size_t i = n - 1; i-- > 0;) {
        const Point& p = pts[i];
        while (hull.size() >= lower &&
               orientation(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    hull.pop_back();  // last point repeats the first
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;
}

bool in_convex_hull(const Point& x, const std::vector<Point>& points) {
    if (points.empty()) return false;
    const size_t d = x.dim();
    for (const auto& p : points)
        if (p.dim() != d)
            throw std::invalid_argument("in_convex_hull: dimension mismatch");
    // Variables: convex weights. Rows: d coordinates plus the sum-to-one row.
    std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(points.size()));
    std::vector<Rational> b(d + 1);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < points.size(); ++j) A[i][j] = points[j][i];
        b[i] = x[i];
    }
    for (size_t j = 0; j < points.size(); ++j) A[d][j] = 1;
    b[d] = 1;
    return lp_feasible(A, b).feasible;
}

bool is_extreme_point(const Point& x, const std::vector<Point>& others) {
    if (others.empty()) return true;
    return !in_convex_hull(x, others);
}

}  // namespace exkn
