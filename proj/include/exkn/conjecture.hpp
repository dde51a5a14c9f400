#pragma once

#include <optional>
#include <vector>

#include "exkn/geometry.hpp"
#include "exkn/paintbox.hpp"

namespace exkn {

// Law of K_n under i.i.d. uniform sampling from m values; m unset means the
// non-atomic limit with law (0,...,0,1). Entries are S(n,k)(m)_{k down}/m^n.
struct VnmVector {
    int n = 0;
    std::optional<unsigned> m;  // nullopt = infinity
    LawOfK law;

    Point as_point() const { return Point(law.probs); }
};

VnmVector v_nm(int n, unsigned m);
VnmVector v_nm_infinity(int n);

struct ExtremeVerdict {
    unsigned m = 0;
    bool extreme = false;
};

// Per-m exact extremality report for {v_{n,m} : m <= m_max} u {v_{n,inf}}.
// An "extreme" verdict is relative to the truncated family (adding points can
// only demote); a "non-extreme" verdict is final.
struct ExtremeReport {
    int n = 0;
    unsigned m_max = 0;
    std::vector<ExtremeVerdict> verdicts;
    bool all_extreme = true;
    double seconds = 0.0;
};

ExtremeReport verify_extremes(int n, unsigned m_max);

// Exact LP test of law in conv({v_{n,m} : m <= m_max} u {v_{n,inf}}).
// A true verdict is conclusive; false is inconclusive evidence only (finite
// truncation of the reference family).
bool hull_membership(const LawOfK& law, int n, unsigned m_max);

}  // namespace exkn
