#include "pencil/binary_form.hpp"

#include "pencil/error.hpp"
#include "pencil/random.hpp"

#include <algorithm>

namespace pencil {

BinaryForm::BinaryForm(int order)
{
    if (order < 0) {
        throw PreconditionError("binary form of negative order " + std::to_string(order));
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational());
}

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw PreconditionError("binary form needs at least one coefficient");
    }
}

BinaryForm BinaryForm::monomial(int order, int x2_power, Rational coeff)
{
    if (x2_power < 0 || x2_power > order) {
        throw PreconditionError("monomial exponent outside 0.." + std::to_string(order));
    }
    BinaryForm f(order);
    f.coeffs_[static_cast<std::size_t>(x2_power)] = std::move(coeff);
    return f;
}

bool BinaryForm::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& other)
{
    if (other.order() != order()) {
        throw DegreeMismatch("adding forms of orders " + std::to_string(order()) + " and " +
                             std::to_string(other.order()));
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& other)
{
    if (other.order() != order()) {
        throw DegreeMismatch("subtracting forms of orders " + std::to_string(order()) + " and " +
                             std::to_string(other.order()));
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b)
{
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return BinaryForm(std::move(out));
}

BinaryForm form_add(const BinaryForm& f, const BinaryForm& g, const Rational& a, const Rational& b)
{
    if (f.order() != g.order()) {
        throw DegreeMismatch("form_add on orders " + std::to_string(f.order()) + " and " +
                             std::to_string(g.order()));
    }
    return f * a + g * b;
}

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g)
{
    return f * g;
}

BinaryForm form_diff(const BinaryForm& f, Axis axis)
{
    const int d = f.order();
    if (d == 0) {
        return BinaryForm(0);
    }
    std::vector<Rational> out(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        // x1^(d-k) x2^k -> (d-k) x1^(d-k-1) x2^k ; x1^(d-k-1) x2^(k+1) -> (k+1) x1^(d-k-1) x2^k
        out[static_cast<std::size_t>(k)] =
            axis == Axis::first ? f.coeff(k) * Rational(d - k) : f.coeff(k + 1) * Rational(k + 1);
    }
    return BinaryForm(std::move(out));
}

BinaryForm form_diff(const BinaryForm& f, int first_count, int second_count)
{
    BinaryForm out = f;
    for (int n = 0; n < first_count; ++n) {
        out = form_diff(out, Axis::first);
    }
    for (int n = 0; n < second_count; ++n) {
        out = form_diff(out, Axis::second);
    }
    return out;
}

BinaryForm linear_power(const Rational& f1, const Rational& f2, int n)
{
    if (n < 0) {
        throw PreconditionError("negative power of a linear form");
    }
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    Rational p1 = 1;
    std::vector<Rational> powers2(static_cast<std::size_t>(n) + 1, Rational(1));
    for (int k = 1; k <= n; ++k) {
        powers2[static_cast<std::size_t>(k)] = powers2[static_cast<std::size_t>(k) - 1] * f2;
    }
    for (int k = n; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = Rational(binomial(n, k)) * p1 * powers2[static_cast<std::size_t>(k)];
        p1 *= f1;
    }
    return BinaryForm(std::move(out));
}

BinaryForm exact_divide(const BinaryForm& numerator, const BinaryForm& divisor)
{
    if (divisor.is_zero()) {
        throw DivisionByZero("exact_divide by the zero form");
    }
    const int m = numerator.order();
    const int n = divisor.order();
    if (m < n) {
        throw PreconditionError("exact_divide: numerator order " + std::to_string(m) + " below divisor order " +
                                std::to_string(n));
    }

    // Dehomogenize at x1 = 1 and long-divide in t = x2.
    int top = n;
    while (divisor.coeff(top).is_zero()) {
        --top;
    }
    const Rational& lead = divisor.coeff(top);

    std::vector<Rational> rem(numerator.coeffs().begin(), numerator.coeffs().end());
    std::vector<Rational> quot(static_cast<std::size_t>(m - top) + 1);
    for (int k = m; k >= top; --k) {
        const Rational& r = rem[static_cast<std::size_t>(k)];
        if (r.is_zero()) {
            continue;
        }
        const Rational c = r / lead;
        quot[static_cast<std::size_t>(k - top)] = c;
        for (int s = 0; s <= top; ++s) {
            rem[static_cast<std::size_t>(k - top + s)] -= c * divisor.coeff(s);
        }
    }
    for (int k = 0; k < top; ++k) {
        if (!rem[static_cast<std::size_t>(k)].is_zero()) {
            throw NotDivisible("exact_divide: nonzero remainder");
        }
    }
    // Re-homogenize: the quotient must fit into order m - n, otherwise N lacks
    // the x1-power factor that D carries.
    for (int k = m - n + 1; k <= m - top; ++k) {
        if (!quot[static_cast<std::size_t>(k)].is_zero()) {
            throw NotDivisible("exact_divide: quotient is not homogeneous of order " + std::to_string(m - n));
        }
    }
    quot.resize(static_cast<std::size_t>(m - n) + 1);
    return BinaryForm(std::move(quot));
}

BinaryForm substitute_linear(const BinaryForm& f, const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d)
{
    const int n = f.order();
    BinaryForm out(n);
    for (int k = 0; k <= n; ++k) {
        if (f.coeff(k).is_zero()) {
            continue;
        }
        out += f.coeff(k) * (linear_power(a, b, n - k) * linear_power(c, d, k));
    }
    return out;
}

BinaryForm random_form(int order, std::uint64_t seed, int bound)
{
    IntegerSource source(seed);
    return random_form(order, source, bound);
}

BinaryForm random_form(int order, IntegerSource& source, int bound)
{
    if (order < 0 || bound < 1) {
        throw PreconditionError("random_form needs order >= 0 and bound >= 1");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    for (;;) {
        for (auto& c : coeffs) {
            c = Rational(source.uniform(-bound, bound));
        }
        BinaryForm f(coeffs);
        if (!f.is_zero()) {
            return f;
        }
    }
}

} // namespace pencil
