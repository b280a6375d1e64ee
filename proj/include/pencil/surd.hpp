#pragma once

#include "pencil/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace pencil {

/// n = square^2 * free with free squarefree, for n >= 1. Trial division, so
/// intended for numbers without large repeated prime factors.
std::pair<Integer, Integer> split_square(const Integer& n);

/// Exact finite sum q_0 + q_1 sqrt(n_1) + ... with distinct squarefree n_k >= 2.
/// Radicand 1 holds the rational part; zero coefficients are never stored.
class SurdSum {
public:
    using Terms = std::map<Integer, Rational>;

    SurdSum() = default;
    SurdSum(const Rational& q);
    SurdSum(int q) : SurdSum(Rational(q)) {}

    /// coeff * sqrt(radicand); the radicand (>= 0) is normalized to squarefree form.
    static SurdSum term(const Rational& coeff, const Integer& radicand);
    /// sqrt(q) for q >= 0.
    static SurdSum root(const Rational& q);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }
    /// At most one radicand present.
    bool is_single_term() const noexcept { return terms_.size() <= 1; }

    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum& operator*=(const Rational& q);

    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(SurdSum a, const Rational& q) { return a *= q; }
    friend SurdSum operator*(const Rational& q, SurdSum a) { return a *= q; }
    friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
    SurdSum operator-() const { return *this * Rational(-1); }

    friend bool operator==(const SurdSum&, const SurdSum&) = default;

    /// "q0 + q1*sqrt(n1) + ...", or "0".
    std::string str() const;

private:
    // Both arguments already normalized.
    void add_normalized(const Integer& radicand, const Rational& coeff);

    Terms terms_;
};

} // namespace pencil
