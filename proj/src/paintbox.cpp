#include "exkn/paintbox.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace exkn {

RankedDiscreteDistribution::RankedDiscreteDistribution(std::vector<Rational> atoms)
    : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_)
        if (a < 0)
            throw std::invalid_argument("paintbox: negative atom weight");
    std::sort(atoms_.begin(), atoms_.end(), std::greater<Rational>());
    while (!atoms_.empty() && atoms_.back() == 0) atoms_.pop_back();
    Rational total = 0;
    for (const auto& a : atoms_) total += a;
    if (total > 1)
        throw std::invalid_argument("paintbox: atom weights exceed 1");
    dust_ = 1 - total;
}

RankedDiscreteDistribution RankedDiscreteDistribution::uniform(unsigned m) {
    if (m == 0) throw std::invalid_argument("uniform: m must be positive");
    return RankedDiscreteDistribution(
        std::vector<Rational>(m, Rational(1, static_cast<long>(m))));
}

LawOfK::LawOfK(int n_, std::vector<Rational> p) : n(n_), probs(std::move(p)) {
    if (n < 1 || probs.size() != static_cast<size_t>(n))
        throw std::invalid_argument("LawOfK: length mismatch");
    Rational total = 0;
    for (const auto& q : probs) {
        if (q < 0 || q > 1)
            throw std::invalid_argument("LawOfK: entry outside [0,1]");
        total += q;
    }
    if (total != 1)
        throw std::invalid_argument("LawOfK: entries must sum to 1");
}

namespace {

struct AtomGroup {
    Rational value;
    unsigned count;
};

// Sum over injective assignments of the remaining blocks (counts[i] blocks of
// size part_sizes[i]) to distinct atoms, of the product of atom weights raised
// to block sizes. Memoized on (group index, remaining counts).
class InjectiveSum {
  public:
    InjectiveSum(std::vector<AtomGroup> groups, std::vector<unsigned> part_sizes)
        : groups_(std::move(groups)), sizes_(std::move(part_sizes)) {}

    Rational eval(const std::vector<unsigned>& counts) { return rec(0, counts); }

  private:
    Rational rec(size_t g, const std::vector<unsigned>& counts) {
        bool done = std::all_of(counts.begin(), counts.end(),
                                [](unsigned c) { return c == 0; });
        if (done) return 1;
        if (g == groups_.size()) return 0;
        auto key = std::make_pair(g, counts);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Rational total = 0;
        std::vector<unsigned> take(sizes_.size(), 0);
        enumerate(g, counts, take, 0, 0, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    // Chooses how many blocks of each size this group absorbs.
    void enumerate(size_t g, const std::vector<unsigned>& counts,
                   std::vector<unsigned>& take, size_t i, unsigned taken,
                   Rational& total) {
        const AtomGroup& grp = groups_[g];
        if (i == sizes_.size()) {
            // Multiplicity: choose which blocks of each size, then injectively
            // place them on the group's identical atoms.
            Integer ways = falling_factorial(grp.count, taken);
            unsigned weight_exp = 0;
            for (size_t j = 0; j < sizes_.size(); ++j) {
                ways *= binomial(counts[j], take[j]);
                weight_exp += take[j] * sizes_[j];
            }
            std::vector<unsigned> rest(counts);
            for (size_t j = 0; j < rest.size(); ++j) rest[j] -= take[j];
            total += Rational(ways) * pow_rational(grp.value, weight_exp) *
                     rec(g + 1, rest);
            return;
        }
        for (unsigned t = 0; t <= counts[i] && taken + t <= grp.count; ++t) {
            take[i] = t;
            enumerate(g, counts, take, i + 1, taken + t, total);
        }
        take[i] = 0;
    }

    std::vector<AtomGroup> groups_;
    std::vector<unsigned> sizes_;
    std::map<std::pair<size_t, std::vector<unsigned>>, Rational> memo_;
};

}  // namespace

Rational paintbox_eppf(const RankedDiscreteDistribution& p,
                       const IntegerPartition& lambda) {
    if (lambda.level() > kMaxPaintboxLevel)
        throw std::invalid_argument("paintbox_eppf: partition level too large");
    if (p.atom_count() > kMaxPaintboxAtoms)
        throw std::invalid_argument("paintbox_eppf: too many atoms");

    // Distinct part sizes with multiplicities.
    std::vector<unsigned> sizes;
    std::vector<unsigned> counts;
    for (unsigned part : lambda.parts) {
        if (!sizes.empty() && sizes.back() == part)
            ++counts.back();
        else {
            sizes.push_back(part);
            counts.push_back(1);
        }
    }
    // Atoms grouped by equal value.
    std::vector<AtomGroup> groups;
    for (const auto& a : p.atoms()) {
        if (!groups.empty() && groups.back().value == a)
            ++groups.back().count;
        else
            groups.push_back({a, 1});
    }

    size_t singleton_idx = sizes.size();
    unsigned singletons = 0;
    if (!sizes.empty() && sizes.back() == 1) {
        singleton_idx = sizes.size() - 1;
        singletons = counts.back();
    }

    InjectiveSum inj(std::move(groups), sizes);
    Rational total = 0;
    // Each subset of the singleton blocks may land in dust (a.s. distinct).
    for (unsigned a = 0; a <= singletons; ++a) {
        if (a > 0 && p.dust() == 0) break;
        std::vector<unsigned> remaining = counts;
        if (a > 0) remaining[singleton_idx] -= a;
        total += Rational(binomial(singletons, a)) * pow_rational(p.dust(), a) *
                 inj.eval(remaining);
    }
    return total;
}

LawOfK law_of_kn(const RankedDiscreteDistribution& p, int n) {
    if (n < 1 || static_cast<unsigned>(n) > kMaxPaintboxLevel)
        throw std::invalid_argument("law_of_kn: n out of range");
    if (p.atom_count() > kMaxPaintboxAtoms)
        throw std::invalid_argument("law_of_kn: too many atoms");
    std::vector<Rational> probs(n, 0);
    for (const auto& lambda : partitions_of(static_cast<unsigned>(n)))
        probs[lambda.length() - 1] +=
            Rational(cluster_count(lambda)) * paintbox_eppf(p, lambda);
    return LawOfK(n, std::move(probs));
}

std::array<Rational, 3> q3_closed(const RankedDiscreteDistribution& p) {
    Rational q1 = 0, q2 = 0, sum_sq_cube = 0;
    for (const auto& pi : p.atoms()) {
        Rational sq = pi * pi;
        Rational cu = sq * pi;
        q1 += cu;
        q2 += 3 * sq * (1 - pi);
        sum_sq_cube += 3 * sq - 2 * cu;
    }
    return {q1, q2, 1 - sum_sq_cube};
}

RankedDiscreteDistribution merge_two_smallest(const RankedDiscreteDistribution& p) {
    if (p.atom_count() < 2)
        throw std::invalid_argument("merge_two_smallest: need two nonzero atoms");
    std::vector<Rational> atoms = p.atoms();  // non-increasing
    Rational merged = atoms[atoms.size() - 1] + atoms[atoms.size() - 2];
    atoms.resize(atoms.size() - 2);
    atoms.push_back(merged);
    return RankedDiscreteDistribution(std::move(atoms));
}

Rational f_of(int N) {
    if (N < 1) throw std::invalid_argument("f_of: N must be positive");
    Rational f(3L * N * (N + 1), 2L * N + 1);
    f.canonicalize();
    return f;
}

Rational l_n_functional(const RankedDiscreteDistribution& p, int N) {
    Rational sum_sq = 0, sum_cu = 0;
    for (const auto& pi : p.atoms()) {
        sum_sq += pi * pi;
        sum_cu += pi * pi * pi;
    }
    return 1 - 3 * sum_sq + f_of(N) * sum_cu;
}

Rational merge_delta(const Rational& a, const Rational& b, int N) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("merge_delta: negative atom weight");
    return 3 * a * b * ((a + b) * f_of(N) - 2);
}

KhintchineDecomposition khintchine_decompose(const RankedDiscreteDistribution& p) {
    KhintchineDecomposition out;
    out.infinite = p.dust();
    const auto& atoms = p.atoms();
    for (size_t i = 0; i < atoms.size(); ++i) {
        Rational next = (i + 1 < atoms.size()) ? atoms[i + 1] : Rational(0);
        Rational w = Rational(static_cast<long>(i + 1)) * (atoms[i] - next);
        if (w != 0) out.finite[static_cast<unsigned>(i + 1)] = w;
    }
    return out;
}

}  // namespace exkn
