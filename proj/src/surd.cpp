#include "pencil/surd.hpp"

#include "pencil/error.hpp"

namespace pencil {

std::pair<Integer, Integer> split_square(const Integer& n)
{
    if (n < 1) {
        throw PreconditionError("split_square needs a positive integer, got " + n.get_str());
    }
    Integer rest = n;
    Integer square = 1;
    Integer free = 1;
    for (Integer p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) {
            square *= p;
        }
        if (e % 2 == 1) {
            free *= p;
        }
    }
    free *= rest;
    return {square, free};
}

SurdSum::SurdSum(const Rational& q)
{
    add_normalized(1, q);
}

SurdSum SurdSum::term(const Rational& coeff, const Integer& radicand)
{
    if (radicand < 0) {
        throw PreconditionError("negative radicand " + radicand.get_str());
    }
    SurdSum out;
    if (radicand == 0) {
        return out;
    }
    const auto [square, free] = split_square(radicand);
    out.add_normalized(free, coeff * Rational(square));
    return out;
}

SurdSum SurdSum::root(const Rational& q)
{
    if (q.sign() < 0) {
        throw PreconditionError("square root of negative rational " + q.str());
    }
    // sqrt(a/b) = sqrt(a b) / b
    return term(Rational(1, q.denominator()), q.numerator() * q.denominator());
}

void SurdSum::add_normalized(const Integer& radicand, const Rational& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

SurdSum& SurdSum::operator+=(const SurdSum& o)
{
    for (const auto& [n, c] : o.terms_) {
        add_normalized(n, c);
    }
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o)
{
    for (const auto& [n, c] : o.terms_) {
        add_normalized(n, -c);
    }
    return *this;
}

SurdSum& SurdSum::operator*=(const Rational& q)
{
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [n, c] : terms_) {
        c *= q;
    }
    return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b)
{
    SurdSum out;
    for (const auto& [n, c] : a.terms_) {
        for (const auto& [m, e] : b.terms_) {
            // sqrt(n) sqrt(m) = g sqrt(nm/g^2) with g = gcd(n, m); both squarefree.
            Integer g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
            out.add_normalized((n / g) * (m / g), c * e * Rational(g));
        }
    }
    return out;
}

std::string SurdSum::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (n == 1) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += "sqrt(" + n.get_str() + ")";
        } else {
            out += mag.str() + "*sqrt(" + n.get_str() + ")";
        }
    }
    return out;
}

} // namespace pencil
