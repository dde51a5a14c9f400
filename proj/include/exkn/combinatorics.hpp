#pragma once

#include <vector>

#include "exkn/rational.hpp"

namespace exkn {

// Partition of a positive integer into non-increasing positive parts.
struct IntegerPartition {
    std::vector<unsigned> parts;  // non-increasing, each >= 1

    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<unsigned> p);

    unsigned level() const;                 // sum of parts
    unsigned length() const { return static_cast<unsigned>(parts.size()); }

    bool operator==(const IntegerPartition& o) const { return parts == o.parts; }
    bool operator<(const IntegerPartition& o) const { return parts < o.parts; }
};

inline constexpr unsigned kMaxPartitionLevel = 60;
inline constexpr unsigned kMaxStirlingN = 200;

// Number of set partitions of [n] into k blocks.
Integer stirling2(unsigned n, unsigned k);

// m(m-1)...(m-k+1); 1 when k = 0, 0 when k > m.
Integer falling_factorial(unsigned m, unsigned k);

Integer binomial(unsigned n, unsigned k);

Integer bell_number(unsigned n);

// All partitions of n in reverse-lexicographic order: (n), ..., (1^n).
std::vector<IntegerPartition> partitions_of(unsigned n);

// Number of set partitions of [n] whose block sizes are the parts of lambda:
// n! / prod_j (j!)^{s_j} s_j!  with s_j the multiplicity of part j.
Integer cluster_count(const IntegerPartition& lambda);

}  // namespace exkn
