#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "jacobi/common.hpp"

namespace jacobi {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar over arbitrary-precision integers.  Values are kept in
// lowest terms with a positive denominator at all times; there is deliberately
// no conversion to floating point anywhere in the library.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw InputError("rational: zero denominator");
        value_ = boost::multiprecision::cpp_rational(num, den);
    }

    // Accepts "p", "-p", "p/q" with optional sign on p; q must be positive
    // after normalization but "p/-q" is tolerated and normalized.
    static Rational parse(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_.is_zero() ? 0 : 1); }

    std::string str() const;

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw InputError("rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(const boost::multiprecision::cpp_rational& v) : value_(v) {}
    boost::multiprecision::cpp_rational value_;
};

// Integer power with negative exponents allowed for invertible bases.
Rational pow(const Rational& base, int exponent);

// n!, (2n-1)!! = 1*3*5*...*(2n-1), and binomial(n, k), all exact.
BigInt factorial(int n);
BigInt double_factorial_odd(int n);

} // namespace jacobi
