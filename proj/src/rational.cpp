#include "pencil/rational.hpp"

#include "pencil/error.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <vector>

namespace pencil {

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto digits = [&](std::string_view what) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected digits in " + std::string(what) + " of \"" + std::string(text) + "\"", pos);
        }
        return Integer(std::string(text.substr(start, pos - start)));
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer num = digits("numerator");
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits("denominator");
        if (den == 0) {
            throw ParseError("zero denominator in \"" + std::string(text) + "\"", pos);
        }
    }
    if (pos != text.size()) {
        throw ParseError("trailing characters in rational \"" + std::string(text) + "\"", pos);
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

Integer factorial(long n)
{
    if (n < 0) {
        throw PreconditionError("factorial of negative argument " + std::to_string(n));
    }
    static std::mutex mutex;
    static std::vector<Integer> table{Integer(1)};
    std::lock_guard lock(mutex);
    while (static_cast<long>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    }
    return table[static_cast<std::size_t>(n)];
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Rational factorial_ratio(long a, long b)
{
    return Rational(factorial(a), factorial(b));
}

} // namespace pencil
