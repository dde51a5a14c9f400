#include "exkn/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace exkn {

namespace {

constexpr unsigned long kSquareFactorBound = 10000;

// Writes n = s^2 * r with r square-free with respect to primes <= bound.
void extract_square_part(Integer n, Integer& s, Integer& r) {
    s = 1;
    for (unsigned long p = 2; p <= kSquareFactorBound; p += (p == 2 ? 1 : 2)) {
        Integer p2 = Integer(p) * p;
        while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
            n /= p2;
            s *= p;
        }
        if (n < p2) break;
    }
    if (is_perfect_square(n)) {
        Integer rt = isqrt_floor(n);
        s *= rt;
        n = 1;
    }
    r = n;
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw std::domain_error("QuadraticNumber: negative radicand");
    if (b_ == 0 || d_ == 0) {
        if (d_ == 0) a_ += b_ * 0;  // sqrt(0) = 0 contributes nothing
        b_ = 0;
        d_ = 0;
        return;
    }
    // sqrt(p/q) = sqrt(p*q)/q; then pull out the square part of p*q.
    Integer pq = d_.get_num() * d_.get_den();
    Integer s, r;
    extract_square_part(pq, s, r);
    Rational scale(s, d_.get_den());
    scale.canonicalize();
    b_ *= scale;
    if (r == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    } else {
        d_ = Rational(r);
    }
}

void QuadraticNumber::check_same_field(const QuadraticNumber& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw std::invalid_argument("QuadraticNumber: mixed radicands");
}

int QuadraticNumber::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    check_same_field(o);
    QuadraticNumber r;
    r.a_ = a_ + o.a_;
    r.b_ = b_ + o.b_;
    r.d_ = is_rational() ? o.d_ : d_;
    if (r.b_ == 0) r.d_ = 0;
    return r;
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
    return *this + (-o);
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
    check_same_field(o);
    Rational d = is_rational() ? o.d_ : d_;
    QuadraticNumber r;
    r.a_ = a_ * o.a_ + b_ * o.b_ * d;
    r.b_ = a_ * o.b_ + b_ * o.a_;
    r.d_ = r.b_ == 0 ? Rational(0) : d;
    return r;
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& o) const {
    check_same_field(o);
    Rational d = is_rational() ? o.d_ : d_;
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
    if (norm == 0) {
        if (o.a_ == 0 && o.b_ == 0)
            throw std::domain_error("QuadraticNumber: division by zero");
        throw std::logic_error("QuadraticNumber: zero norm with nonzero element");
    }
    QuadraticNumber conj;
    conj.a_ = o.a_ / norm;
    conj.b_ = -o.b_ / norm;
    conj.d_ = d;
    return *this * conj;
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return a_ == o.a_;
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

double QuadraticNumber::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

}  // namespace exkn
