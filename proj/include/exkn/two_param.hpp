#pragma once

#include <array>

#include "exkn/combinatorics.hpp"
#include "exkn/eppf.hpp"
#include "exkn/quadratic.hpp"
#include "exkn/rational.hpp"

namespace exkn {

// Parameter pair of the Ewens-Pitman family. Valid regimes:
//   Main:        0 <= alpha < 1 and theta > -alpha
//   Exceptional: alpha < 0 and theta = -m alpha for a positive integer m
struct ParamsAT {
    enum class Regime { Main, Exceptional };

    Rational alpha;
    Rational theta;
    Regime regime;

    static ParamsAT make(Rational alpha, Rational theta);
};

// EPPF p_{alpha,theta}(lambda) of the Chinese restaurant construction.
Rational eppf_at(const ParamsAT& params, const IntegerPartition& lambda);

// (P(K_3=1), P(K_3=2), P(K_3=3)) in closed form.
std::array<Rational, 3> k3_law_at(const ParamsAT& params);

// Ewens-Pitman EPPF table at level m (helper for the finite-partition engine).
EppfTable eppf_table_at(const ParamsAT& params, unsigned m);

// The m-ray reparameterization alpha = m(1+theta): open theta domain
// (-m/(m+1), (1-m)/m), the upper endpoint read as +infinity for m = 0.
bool theta_in_m_domain(const Rational& m, const Rational& theta);

// q_i^{(m)}(theta) along the ray alpha = m(1+theta); field-generic so the
// same formulas evaluate over rationals and over quadratic numbers.
template <class F>
std::array<F, 3> k3_law_on_ray(const F& m, const F& theta) {
    F one(Rational(1)), two(Rational(2)), three(Rational(3));
    F den = (one + theta) * (two + theta);
    F a = one - m - m * theta;        // 1 - alpha
    F b = m + (m + one) * theta;      // theta + alpha
    F q1 = a * (two - m - m * theta) / den;
    F q2 = three * a * b / den;
    F q3 = b * (two * m + (two * m + one) * theta) / den;
    return {q1, q2, q3};
}

// theta = tau(m), where q_1^{(m)} = q_3^{(m)} and q_2^{(m)} peaks:
// (-m^2 - 3m + sqrt((m+1)(m+2))) / (1 + 3m + m^2).
QuadraticNumber tau(const Rational& m);

// The m-dual of theta: the other solution of q_2^{(m)}(theta') = q_2^{(m)}(theta).
Rational dual_theta(const Rational& m, const Rational& theta);

// h(q1,q3) = 4(q1+q3) + 5 q1 q3 - 2(q1^2+q3^2) - 2; zero on the Ewens image curve.
Rational h_curve(const Rational& q1, const Rational& q3);

// Inverse of (alpha,theta) -> (q1,q3) on {h >= 0, q1+q3 < 1}.
ParamsAT inverse_map(const Rational& q1, const Rational& q3);

// The unique main-regime pair whose K_3 law swaps q1 and q3 (q2 preserved),
// computed through the m-ray: m = alpha/(1+theta), theta* = dual, alpha* = m(1+theta*).
ParamsAT dual_params(const ParamsAT& params);

// Exact check of (4+3m)(q1+q3) + 5 q1 q3 - 2(q1^2+q3^2) - 2 - 3m = 0,
// the radical-free form of the m-ray image curve.
bool varphi_m_relation_check(const Rational& m, const Rational& q1,
                             const Rational& q3);

// K_3 law on the exceptional (symmetric Dirichlet) ray theta = -m alpha.
std::array<Rational, 3> dirichlet_ray_law(unsigned m, const Rational& alpha);

}  // namespace exkn
