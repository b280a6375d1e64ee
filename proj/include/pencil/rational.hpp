#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pencil {

using Integer = mpz_class;

/// Arbitrary precision fraction, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(long long n) : value_(static_cast<long>(n)) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q" and "-p/q" (decimal digits only, q != 0).
    static Rational parse(std::string_view text);

    std::string str() const { return value_.get_str(); }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// n! for n >= 0, memoized. Throws PreconditionError for n < 0.
Integer factorial(long n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// a!/b! as an exact rational.
Rational factorial_ratio(long a, long b);

} // namespace pencil
