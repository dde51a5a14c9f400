#pragma once

#include "exkn/rational.hpp"

namespace exkn {

// Element a + b*sqrt(d) of a real quadratic field, with rational a, b and
// radicand d >= 0. On construction d is normalized by pulling square factors
// (trial division up to 10^4) into b; if d becomes a perfect rational square
// the value is folded into a and stored with b = 0, d = 0. Two elements over
// the same normalized d are closed under +, -, *, /, and equality and sign
// are decided exactly.
class QuadraticNumber {
  public:
    QuadraticNumber() : a_(0), b_(0), d_(0) {}
    QuadraticNumber(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadraticNumber(Rational a, Rational b, Rational d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }

    // -1, 0, or 1; exact (squares out the radical with sign analysis).
    int sign() const;

    QuadraticNumber operator-() const;
    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;
    QuadraticNumber operator/(const QuadraticNumber& o) const;

    bool operator==(const QuadraticNumber& o) const;
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }
    bool operator<(const QuadraticNumber& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadraticNumber& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadraticNumber& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadraticNumber& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;

    static QuadraticNumber sqrt_of(const Rational& d) {
        return QuadraticNumber(Rational(0), Rational(1), d);
    }

  private:
    void check_same_field(const QuadraticNumber& o) const;

    Rational a_, b_, d_;
};

}  // namespace exkn
