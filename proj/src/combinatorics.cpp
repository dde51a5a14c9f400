#include "exkn/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace exkn {

IntegerPartition::IntegerPartition(std::vector<unsigned> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition: parts must be non-increasing");
    }
}

unsigned IntegerPartition::level() const {
    unsigned s = 0;
    for (unsigned p : parts) s += p;
    return s;
}

Integer stirling2(unsigned n, unsigned k) {
    if (k > n || n > kMaxStirlingN)
        throw std::invalid_argument("stirling2: k out of range or n too large");
    // Row-by-row recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).
    std::vector<Integer> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, n); j >= 1; --j)
            row[j] = Integer(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Integer falling_factorial(unsigned m, unsigned k) {
    if (k > m) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= m - i;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer bell_number(unsigned n) {
    Integer b = 0;
    for (unsigned k = 0; k <= n; ++k) b += stirling2(n, k);
    return b;
}

std::vector<IntegerPartition> partitions_of(unsigned n) {
    if (n < 1 || n > kMaxPartitionLevel)
        throw std::invalid_argument("partitions_of: n out of range");
    std::vector<IntegerPartition> out;
    std::vector<unsigned> cur;
    // Reverse-lexicographic: at each position try the largest allowed part first.
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(IntegerPartition{cur});
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Integer cluster_count(const IntegerPartition& lambda) {
    unsigned n = lambda.level();
    Integer num;
    mpz_fac_ui(num.get_mpz_t(), n);
    Integer den = 1;
    size_t i = 0;
    while (i < lambda.parts.size()) {
        unsigned j = lambda.parts[i];
        unsigned mult = 0;
        while (i < lambda.parts.size() && lambda.parts[i] == j) {
            ++mult;
            ++i;
        }
        Integer jfac;
        mpz_fac_ui(jfac.get_mpz_t(), j);
        den *= pow_integer(jfac, mult);
        Integer mfac;
        mpz_fac_ui(mfac.get_mpz_t(), mult);
        den *= mfac;
    }
    return num / den;  // exact by construction
}

}  // namespace exkn
