#pragma once

#include <cstdint>
#include <string>

#include "exkn/paintbox.hpp"
#include "exkn/two_param.hpp"

namespace exkn {

// Empirical-vs-exact comparison of a K_n law. The per-cell tolerance check is
// exact: (emp - p)^2 * reps <= 16 p(1-p), i.e. four standard errors at the
// exact cell probability (cells with p in {0,1} must match exactly).
struct SampleReport {
    int n = 0;
    long reps = 0;
    std::uint64_t seed = 0;
    std::string rng;  // generator + substream derivation identifier
    std::vector<Rational> empirical;  // counts / reps
    LawOfK exact;
    Rational max_abs_deviation;
    Rational sigma_bound;  // max over cells of a rational upper bound on 4*stderr
    bool within_tolerance = false;
};

inline constexpr long kMaxSampleReps = 10'000'000;

// Chinese-restaurant-process sampler for the Ewens-Pitman family.
SampleReport sample_crp(const ParamsAT& params, int n, long reps,
                        std::uint64_t seed);

// I.i.d. paintbox sampler; dust draws are fresh unique symbols.
SampleReport sample_paintbox(const RankedDiscreteDistribution& p, int n,
                             long reps, std::uint64_t seed);

// Symmetric-Dirichlet paintbox sampler on the exceptional ray; the exact
// reference law is closed-form for n = 3 only.
SampleReport sample_dirichlet_uniform(unsigned m, const Rational& neg_alpha,
                                      int n, long reps, std::uint64_t seed);

}  // namespace exkn
