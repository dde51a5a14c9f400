#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace exkn {

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class canonicalizes on construction and arithmetic).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b" or "a", optional leading sign.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Integer isqrt_floor(const Integer& x) {
    if (x < 0) throw std::domain_error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

// True iff r is the square of a rational; if so, *root is the nonnegative root.
inline bool rational_sqrt_exact(const Rational& r, Rational* root) {
    if (r < 0) return false;
    if (!is_perfect_square(r.get_num()) || !is_perfect_square(r.get_den()))
        return false;
    if (root) *root = Rational(isqrt_floor(r.get_num()), isqrt_floor(r.get_den()));
    return true;
}

// Rational upper bound on sqrt(r), exact when r is a perfect square.
inline Rational sqrt_upper_bound(const Rational& r) {
    if (r < 0) throw std::domain_error("sqrt of negative rational");
    // sqrt(a/b) = sqrt(a*b)/b <= (floor(sqrt(a*b)) + 1)/b, tight when a*b is square
    Integer ab = r.get_num() * r.get_den();
    Integer s = isqrt_floor(ab);
    if (s * s != ab) s += 1;
    Rational out(s, r.get_den());
    out.canonicalize();
    return out;
}

}  // namespace exkn
