#pragma once

#include "pencil/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pencil {

class IntegerSource;

/// The two scalar variables x1, x2 of a single binary pair.
enum class Axis { first, second };

/// Homogeneous form of order d in (x1, x2). coeffs[k] multiplies x1^(d-k) x2^k.
/// The zero form keeps its order.
class BinaryForm {
public:
    /// Zero form of the given order.
    explicit BinaryForm(int order = 0);
    /// Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit BinaryForm(std::vector<Rational> coeffs);

    static BinaryForm monomial(int order, int x2_power, Rational coeff = 1);
    static BinaryForm constant(Rational value) { return BinaryForm(std::vector<Rational>{std::move(value)}); }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(int x2_power) const { return coeffs_.at(static_cast<std::size_t>(x2_power)); }
    bool is_zero() const;

    BinaryForm& operator+=(const BinaryForm& other);
    BinaryForm& operator-=(const BinaryForm& other);
    BinaryForm& operator*=(const Rational& scalar);

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(BinaryForm a, const Rational& s) { return a *= s; }
    friend BinaryForm operator*(const Rational& s, BinaryForm a) { return a *= s; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    BinaryForm operator-() const { return *this * Rational(-1); }

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// a*F + b*G. Throws DegreeMismatch when the orders differ.
BinaryForm form_add(const BinaryForm& f, const BinaryForm& g, const Rational& a = 1, const Rational& b = 1);

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g);

/// Formal partial derivative. The order drops by one; the derivative of a
/// constant is the zero form of order 0.
BinaryForm form_diff(const BinaryForm& f, Axis axis);

/// Mixed partial of order (first_count, second_count).
BinaryForm form_diff(const BinaryForm& f, int first_count, int second_count);

/// (f1 x1 + f2 x2)^n.
BinaryForm linear_power(const Rational& f1, const Rational& f2, int n);

/// Q with N = D * Q. Throws DivisionByZero for D = 0, NotDivisible when the
/// remainder is nonzero, PreconditionError when order(N) < order(D).
BinaryForm exact_divide(const BinaryForm& numerator, const BinaryForm& divisor);

/// F(a x1 + b x2, c x1 + d x2).
BinaryForm substitute_linear(const BinaryForm& f, const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d);

/// Deterministic nonzero form with integer coefficients in [-bound, bound].
BinaryForm random_form(int order, std::uint64_t seed, int bound);

/// Same draw, continuing an existing stream.
BinaryForm random_form(int order, IntegerSource& source, int bound);

} // namespace pencil
