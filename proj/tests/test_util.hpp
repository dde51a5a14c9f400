#pragma once

#include <random>
#include <vector>

#include "exkn/paintbox.hpp"
#include "exkn/rational.hpp"

namespace exkn::testing {

// Uniform rational in (0, 1] with denominator <= max_den.
inline Rational random_unit_rational(std::mt19937_64& rng, long max_den = 60) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(1, den);
    Rational r(num_dist(rng), den);
    r.canonicalize();
    return r;
}

// Random paintbox with up to max_atoms atoms; when with_dust, atom mass is
// scaled down so a positive dust component remains.
inline RankedDiscreteDistribution random_paintbox(std::mt19937_64& rng,
                                                  unsigned max_atoms,
                                                  bool with_dust) {
    std::uniform_int_distribution<unsigned> m_dist(1, max_atoms);
    unsigned m = m_dist(rng);
    std::vector<Rational> raw(m);
    Rational total = 0;
    for (auto& a : raw) total += (a = random_unit_rational(rng));
    Rational scale = with_dust ? Rational(random_unit_rational(rng, 7) /
                                          (total + 1))
                               : 1 / total;
    for (auto& a : raw) a *= scale;
    return RankedDiscreteDistribution(std::move(raw));
}

// Independent oracle for the law of K_n: enumerate every outcome sequence
// over the atoms plus a "fresh" symbol for dust (each fresh draw is a new
// distinct value), weighting by the product of draw probabilities.
inline LawOfK brute_force_law(const RankedDiscreteDistribution& p, int n) {
    const auto& atoms = p.atoms();
    const size_t m = atoms.size();
    std::vector<Rational> probs(n, 0);
    std::vector<size_t> draw(n, 0);  // values 0..m-1 atoms, m = fresh
    while (true) {
        Rational weight = 1;
        std::vector<bool> seen(m, false);
        int distinct = 0;
        for (int t = 0; t < n; ++t) {
            size_t v = draw[t];
            if (v == m) {
                weight *= p.dust();
                ++distinct;
            } else {
                weight *= atoms[v];
                if (!seen[v]) {
                    seen[v] = true;
                    ++distinct;
                }
            }
        }
        probs[distinct - 1] += weight;
        int t = n - 1;
        while (t >= 0 && draw[t] == m) draw[t--] = 0;
        if (t < 0) break;
        ++draw[t];
    }
    return LawOfK(n, std::move(probs));
}

}  // namespace exkn::testing
