#include "exkn/sampler.hpp"

#include <random>
#include <stdexcept>

namespace exkn {

namespace {

const char* kRngId = "mt19937_64(splitmix64(seed))";

// splitmix64 step, the documented seed-scrambling stage.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

SampleReport finalize(int n, long reps, std::uint64_t seed,
                      const std::vector<long>& counts, LawOfK exact) {
    SampleReport rep;
    rep.n = n;
    rep.reps = reps;
    rep.seed = seed;
    rep.rng = kRngId;
    rep.exact = std::move(exact);
    rep.max_abs_deviation = 0;
    rep.sigma_bound = 0;
    rep.within_tolerance = true;
    for (int k = 1; k <= n; ++k) {
        Rational emp(counts[k - 1], reps);
        emp.canonicalize();
        rep.empirical.push_back(emp);
        const Rational& p = rep.exact.at(k);
        Rational dev = abs(emp - p);
        if (dev > rep.max_abs_deviation) rep.max_abs_deviation = dev;
        Rational var = p * (1 - p) / reps;
        Rational bound = 4 * sqrt_upper_bound(var);
        if (bound > rep.sigma_bound) rep.sigma_bound = bound;
        // Exact four-sigma test: (emp - p)^2 <= 16 p (1-p) / reps.
        if (dev * dev > 16 * var) rep.within_tolerance = false;
    }
    return rep;
}

void check_reps(int n, long reps) {
    if (n < 1) throw std::invalid_argument("sampler: n must be positive");
    if (reps < 1 || reps > kMaxSampleReps)
        throw std::invalid_argument("sampler: reps out of range");
}

}  // namespace

SampleReport sample_crp(const ParamsAT& params, int n, long reps,
                        std::uint64_t seed) {
    check_reps(n, reps);
    if (n > 20) throw std::invalid_argument("sample_crp: n too large");

    // Exact reference law from the EPPF partition sum.
    std::vector<Rational> probs(n, 0);
    for (const auto& lambda : partitions_of(static_cast<unsigned>(n)))
        probs[lambda.length() - 1] +=
            Rational(cluster_count(lambda)) * eppf_at(params, lambda);
    LawOfK exact(n, std::move(probs));

    const double alpha = params.alpha.get_d();
    const double theta = params.theta.get_d();
    // The attachment probabilities at every reachable step state sum to 1 in
    // exact arithmetic: cluster sizes summing to t with k clusters give
    // (t - k alpha) + (theta + k alpha) = t + theta.
    for (int t = 1; t < n; ++t) {
        for (int k = 1; k <= t; ++k) {
            Rational total = (t - k * params.alpha) + (params.theta + k * params.alpha);
            if (total != t + params.theta)
                throw std::logic_error("sample_crp: attachment weights do not sum to 1");
        }
    }

    auto rng = make_engine(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<long> counts(n, 0);
    std::vector<int> sizes;
    for (long r = 0; r < reps; ++r) {
        sizes.assign(1, 1);
        for (int t = 1; t < n; ++t) {
            double u = unif(rng) * (t + theta);
            int joined = -1;
            for (size_t i = 0; i < sizes.size(); ++i) {
                double w = sizes[i] - alpha;
                if (u < w) {
                    joined = static_cast<int>(i);
                    break;
                }
                u -= w;
            }
            if (joined >= 0)
                ++sizes[joined];
            else
                sizes.push_back(1);
        }
        ++counts[sizes.size() - 1];
    }
    return finalize(n, reps, seed, counts, std::move(exact));
}

SampleReport sample_paintbox(const RankedDiscreteDistribution& p, int n,
                             long reps, std::uint64_t seed) {
    check_reps(n, reps);
    LawOfK exact = law_of_kn(p, n);

    std::vector<double> atom_probs;
    for (const auto& a : p.atoms()) atom_probs.push_back(a.get_d());

    auto rng = make_engine(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<long> counts(n, 0);
    std::vector<int> hits(atom_probs.size());
    for (long r = 0; r < reps; ++r) {
        std::fill(hits.begin(), hits.end(), 0);
        int distinct = 0;
        for (int t = 0; t < n; ++t) {
            double u = unif(rng);
            int idx = -1;
            for (size_t i = 0; i < atom_probs.size(); ++i) {
                if (u < atom_probs[i]) {
                    idx = static_cast<int>(i);
                    break;
                }
                u -= atom_probs[i];
            }
            if (idx < 0)
                ++distinct;  // dust: fresh unique symbol
            else if (hits[idx]++ == 0)
                ++distinct;
        }
        ++counts[distinct - 1];
    }
    return finalize(n, reps, seed, counts, std::move(exact));
}

SampleReport sample_dirichlet_uniform(unsigned m, const Rational& neg_alpha,
                                      int n, long reps, std::uint64_t seed) {
    check_reps(n, reps);
    if (m < 1) throw std::invalid_argument("sample_dirichlet_uniform: m >= 1");
    if (neg_alpha <= 0)
        throw std::invalid_argument("sample_dirichlet_uniform: parameter must be positive");
    if (n != 3)
        throw std::invalid_argument(
            "sample_dirichlet_uniform: exact reference law is closed-form for n=3 only");
    LawOfK exact(3, {dirichlet_ray_law(m, -neg_alpha)[0],
                     dirichlet_ray_law(m, -neg_alpha)[1],
                     dirichlet_ray_law(m, -neg_alpha)[2]});

    auto rng = make_engine(seed);
    std::gamma_distribution<double> gamma(neg_alpha.get_d(), 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<long> counts(n, 0);
    std::vector<double> w(m);
    std::vector<int> hits(m);
    for (long r = 0; r < reps; ++r) {
        double total = 0;
        for (auto& wi : w) total += (wi = gamma(rng));
        std::fill(hits.begin(), hits.end(), 0);
        int distinct = 0;
        for (int t = 0; t < n; ++t) {
            double u = unif(rng) * total;
            size_t idx = 0;
            while (idx + 1 < w.size() && u >= w[idx]) u -= w[idx++];
            if (hits[idx]++ == 0) ++distinct;
        }
        ++counts[distinct - 1];
    }
    return finalize(n, reps, seed, counts, std::move(exact));
}

}  // namespace exkn
