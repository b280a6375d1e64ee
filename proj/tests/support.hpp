#pragma once

#include "pencil/binary_form.hpp"
#include "pencil/multi_form.hpp"
#include "pencil/random.hpp"

#include <array>
#include <initializer_list>
#include <utility>

namespace testing {

using pencil::BinaryForm;
using pencil::IntegerSource;
using pencil::MultiForm;
using pencil::PairId;
using pencil::Rational;

// Small rational, zero allowed.
inline Rational small_rational(IntegerSource& src, long bound = 6)
{
    return Rational(src.uniform(-bound, bound), src.uniform(1, bound));
}

// Rational coefficients, not forced nonzero.
inline BinaryForm rational_form(int order, IntegerSource& src, long bound = 6)
{
    std::vector<Rational> c;
    for (int k = 0; k <= order; ++k) {
        c.push_back(small_rational(src, bound));
    }
    return BinaryForm(std::move(c));
}

// Point evaluation, written independently of the library's own arithmetic paths.
inline Rational evaluate(const BinaryForm& f, const Rational& x1, const Rational& x2)
{
    Rational sum;
    const int d = f.order();
    for (int k = 0; k <= d; ++k) {
        Rational term = f.coeff(k);
        for (int a = 0; a < d - k; ++a) {
            term *= x1;
        }
        for (int b = 0; b < k; ++b) {
            term *= x2;
        }
        sum += term;
    }
    return sum;
}

// Random multihomogeneous form: `terms` monomials of the given degree in each listed pair.
inline MultiForm random_multi(std::initializer_list<std::pair<PairId, int>> degrees, IntegerSource& src, int terms = 6)
{
    pencil::Profile profile{};
    for (const auto& [p, deg] : degrees) {
        profile[static_cast<std::size_t>(p)] = deg;
    }
    MultiForm::Terms out;
    for (int n = 0; n < terms; ++n) {
        pencil::Exponents e{};
        for (const auto& [p, deg] : degrees) {
            const long second = src.uniform(0, deg);
            e[2 * static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(deg - second);
            e[2 * static_cast<std::size_t>(p) + 1] = static_cast<std::uint16_t>(second);
        }
        out[e] += Rational(src.uniform(-9, 9));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return MultiForm(profile, std::move(out));
}

// Integer matrix of determinant 1 as a product of elementary shears.
inline std::array<long, 4> unimodular(IntegerSource& src)
{
    std::array<long, 4> m{1, 0, 0, 1};
    for (int step = 0; step < 4; ++step) {
        const long k = src.uniform(-3, 3);
        if (step % 2 == 0) {
            m = {m[0] + k * m[2], m[1] + k * m[3], m[2], m[3]};
        } else {
            m = {m[0], m[1], m[2] + k * m[0], m[3] + k * m[1]};
        }
    }
    return m;
}

} // namespace testing
