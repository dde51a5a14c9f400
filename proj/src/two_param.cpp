#include "exkn/two_param.hpp"

#include <stdexcept>

namespace exkn {

namespace {

Rational rising_factorial(const Rational& x, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x + static_cast<long>(i);
    return r;
}

}  // namespace

ParamsAT ParamsAT::make(Rational alpha, Rational theta) {
    if (alpha >= 0 && alpha < 1 && theta > -alpha)
        return {std::move(alpha), std::move(theta), Regime::Main};
    if (alpha < 0 && theta > 0) {
        Rational m = theta / -alpha;
        if (m.get_den() == 1 && m >= 1)
            return {std::move(alpha), std::move(theta), Regime::Exceptional};
    }
    throw std::invalid_argument(
        "ParamsAT: require 0 <= alpha < 1, theta > -alpha, or alpha < 0 with "
        "theta = -m alpha for a positive integer m");
}

Rational eppf_at(const ParamsAT& params, const IntegerPartition& lambda) {
    const unsigned n = lambda.level();
    if (n > 30) throw std::invalid_argument("eppf_at: partition level too large");
    const unsigned k = lambda.length();
    // The leading theta of (theta + i alpha)_{i<k} cancels against the one in
    // (theta)_n, so divide it out symbolically (theta = 0 is a valid Ewens
    // parameter only in the alpha > 0 regime and must not hit a 0/0).
    Rational num = 1;
    for (unsigned i = 1; i < k; ++i)
        num *= params.theta + static_cast<long>(i) * params.alpha;
    for (unsigned part : lambda.parts)
        num *= rising_factorial(1 - params.alpha, part - 1);
    return num / rising_factorial(params.theta + 1, n - 1);
}

std::array<Rational, 3> k3_law_at(const ParamsAT& params) {
    const Rational& a = params.alpha;
    const Rational& t = params.theta;
    Rational den = (1 + t) * (2 + t);
    return {(1 - a) * (2 - a) / den, 3 * (1 - a) * (t + a) / den,
            (t + a) * (t + 2 * a) / den};
}

EppfTable eppf_table_at(const ParamsAT& params, unsigned m) {
    EppfTable table;
    table.m = m;
    for (const auto& lambda : partitions_of(m))
        table.values[lambda] = eppf_at(params, lambda);
    table.validate();
    return table;
}

bool theta_in_m_domain(const Rational& m, const Rational& theta) {
    if (m < 0) return false;
    if (m == 0) return theta > 0;
    return theta > -m / (m + 1) && theta < (1 - m) / m;
}

QuadraticNumber tau(const Rational& m) {
    if (m < 0) throw std::domain_error("tau: m must be nonnegative");
    Rational den = 1 + 3 * m + m * m;
    return QuadraticNumber((-m * m - 3 * m) / den, 1 / den, (m + 1) * (m + 2));
}

Rational dual_theta(const Rational& m, const Rational& theta) {
    if (!theta_in_m_domain(m, theta))
        throw std::domain_error("dual_theta: theta outside the open m-domain");
    Rational c = m * (3 + m) * (1 + theta);
    Rational out = (2 - c) / (theta + c);
    if (!theta_in_m_domain(m, out))
        throw std::logic_error("dual_theta: dual left the domain");
    return out;
}

Rational h_curve(const Rational& q1, const Rational& q3) {
    return 4 * (q1 + q3) + 5 * q1 * q3 - 2 * (q1 * q1 + q3 * q3) - 2;
}

ParamsAT inverse_map(const Rational& q1, const Rational& q3) {
    Rational h = h_curve(q1, q3);
    if (h < 0 || q1 + q3 >= 1)
        throw std::domain_error("inverse_map: (q1,q3) outside {h >= 0, q1+q3 < 1}");
    Rational D = 5 * q1 + 2 * q3 + 4 * q1 * q3 - 4 * q1 * q1 - q3 * q3 - 1;
    if (D == 0)
        throw std::domain_error("inverse_map: degenerate point (zero denominator)");
    Rational alpha = h / D;
    Rational theta =
        -(8 * q1 + 5 * q3 + 4 * q1 * q3 - 4 * q1 * q1 - q3 * q3 - 4) / D;
    return ParamsAT::make(std::move(alpha), std::move(theta));
}

ParamsAT dual_params(const ParamsAT& params) {
    if (params.regime != ParamsAT::Regime::Main)
        throw std::domain_error("dual_params: main regime required");
    Rational m = params.alpha / (1 + params.theta);
    Rational theta_star = dual_theta(m, params.theta);
    Rational alpha_star = m * (1 + theta_star);
    return ParamsAT::make(std::move(alpha_star), std::move(theta_star));
}

bool varphi_m_relation_check(const Rational& m, const Rational& q1,
                             const Rational& q3) {
    return (4 + 3 * m) * (q1 + q3) + 5 * q1 * q3 - 2 * (q1 * q1 + q3 * q3) - 2 -
               3 * m ==
           0;
}

std::array<Rational, 3> dirichlet_ray_law(unsigned m, const Rational& alpha) {
    if (m < 1) throw std::invalid_argument("dirichlet_ray_law: m must be positive");
    if (alpha >= 0)
        throw std::invalid_argument("dirichlet_ray_law: alpha must be negative");
    return k3_law_at(ParamsAT::make(alpha, -static_cast<long>(m) * alpha));
}

}  // namespace exkn
