#pragma once

#include <array>
#include <map>
#include <vector>

#include "exkn/combinatorics.hpp"
#include "exkn/rational.hpp"

namespace exkn {

// Ranked discrete distribution (paintbox): atom weights in non-increasing
// order, summing to at most 1; the deficit is continuous "dust" mass whose
// samples are almost surely distinct. Zero atoms are stripped on construction.
class RankedDiscreteDistribution {
  public:
    RankedDiscreteDistribution() : dust_(1) {}
    explicit RankedDiscreteDistribution(std::vector<Rational> atoms);

    static RankedDiscreteDistribution uniform(unsigned m);

    const std::vector<Rational>& atoms() const { return atoms_; }
    const Rational& dust() const { return dust_; }
    size_t atom_count() const { return atoms_.size(); }

    bool operator==(const RankedDiscreteDistribution& o) const {
        return atoms_ == o.atoms_;
    }

  private:
    std::vector<Rational> atoms_;  // non-increasing, all > 0
    Rational dust_;                // 1 - sum(atoms)
};

// Distribution of K_n: probs[k-1] = P(K_n = k), entries sum to 1.
struct LawOfK {
    int n = 0;
    std::vector<Rational> probs;

    LawOfK() = default;
    LawOfK(int n_, std::vector<Rational> p);

    const Rational& at(int k) const { return probs.at(k - 1); }
    bool operator==(const LawOfK& o) const { return n == o.n && probs == o.probs; }
};

inline constexpr unsigned kMaxPaintboxLevel = 12;
inline constexpr unsigned kMaxPaintboxAtoms = 16;

// EPPF of the paintbox: probability that the induced partition of [n] has
// block sizes lambda. Blocks of size >= 2 must land on distinct atoms;
// singletons may also land in dust.
Rational paintbox_eppf(const RankedDiscreteDistribution& p,
                       const IntegerPartition& lambda);

// P(K_n = k) for k = 1..n via the cluster-count expansion of the EPPF.
LawOfK law_of_kn(const RankedDiscreteDistribution& p, int n);

// Closed forms (q_{3,1}, q_{3,2}, q_{3,3}) = (sum p_i^3, sum 3p_i^2(1-p_i), rest).
std::array<Rational, 3> q3_closed(const RankedDiscreteDistribution& p);

// Replaces the two smallest nonzero atoms by their sum; dust unchanged.
RankedDiscreteDistribution merge_two_smallest(const RankedDiscreteDistribution& p);

// f(N) = 3N(N+1)/(2N+1), the cubic coefficient of L_N.
Rational f_of(int N);

// L_N(p) = 1 - 3 sum p_i^2 + f(N) sum p_i^3.
Rational l_n_functional(const RankedDiscreteDistribution& p, int N);

// Change in L_N caused by merging two atoms a, b: 3ab[(a+b)f(N) - 2].
Rational merge_delta(const Rational& a, const Rational& b, int N);

// Unique convex-combination weights over the uniform extreme points u_m:
// w_m = m (p_m - p_{m+1}) for finite m, and dust on u_infinity.
struct KhintchineDecomposition {
    std::map<unsigned, Rational> finite;  // m -> weight (nonzero entries only)
    Rational infinite;                    // weight on u_infinity
};
KhintchineDecomposition khintchine_decompose(const RankedDiscreteDistribution& p);

}  // namespace exkn
