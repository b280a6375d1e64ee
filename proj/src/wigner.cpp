#include "pencil/wigner.hpp"

#include "pencil/error.hpp"
#include "pencil/syzygy.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <vector>

namespace pencil {

namespace {

// Exponents of primes in a rational built from factorials.
using PrimePowers = std::map<long, long>;

const std::vector<long>& primes_up_to(long n)
{
    static thread_local std::vector<long> primes;
    static thread_local long limit = 1;
    if (n > limit) {
        limit = std::max(n, 2 * limit);
        std::vector<bool> composite(limit + 1, false);
        primes.clear();
        for (long p = 2; p <= limit; ++p) {
            if (!composite[p]) {
                primes.push_back(p);
                for (long k = p * p; k <= limit; k += p) {
                    composite[k] = true;
                }
            }
        }
    }
    return primes;
}

void add_factorial(PrimePowers& pp, long n, long sign)
{
    for (long p : primes_up_to(n)) {
        if (p > n) {
            break;
        }
        long e = 0;
        for (long q = n / p; q > 0; q /= p) {
            e += q;
        }
        pp[p] += sign * e;
    }
}

// sqrt of the product as coeff * sqrt(radicand) with squarefree radicand.
SurdSum sqrt_of(const PrimePowers& pp)
{
    Integer num = 1;
    Integer den = 1;
    Integer radicand = 1;
    for (const auto& [p, e] : pp) {
        if (e % 2 != 0) {
            radicand *= p;
        }
        // floor(e/2), so p^e = p^(2 floor(e/2)) * p^(e mod 2)
        const long half = e >= 0 ? e / 2 : -((-e + 1) / 2);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(half >= 0 ? half : -half));
        (half >= 0 ? num : den) *= power;
    }
    return SurdSum::term(Rational(num, den), radicand);
}

int phase(int twice_k)
{
    if (twice_k % 2 != 0) {
        throw FormulaViolation("phase exponent " + HalfInt::from_twice(twice_k).str() + " is not an integer");
    }
    return (twice_k / 2) % 2 == 0 ? 1 : -1;
}

// Factorial of a half-integer quantity known to be integral.
long whole(int twice)
{
    return twice / 2;
}

bool is_triad(int a, int b, int c)
{
    return a + b + c >= 0 && (a + b + c) % 2 == 0 && c >= std::abs(a - b) && c <= a + b;
}

void require_nonnegative(std::initializer_list<HalfInt> js, const char* what)
{
    for (HalfInt j : js) {
        if (j.twice < 0) {
            throw PreconditionError(std::string(what) + ": negative angular momentum " + j.str());
        }
    }
}

void require_integral_perimeter(HalfInt a, HalfInt b, HalfInt c, const char* what)
{
    if ((a.twice + b.twice + c.twice) % 2 != 0) {
        throw PreconditionError(std::string(what) + ": triad (" + a.str() + ", " + b.str() + ", " + c.str() +
                                ") has half-integral perimeter");
    }
}

// Triangle coefficient Delta(abc) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!, in twice-values.
void add_delta(PrimePowers& pp, int a, int b, int c)
{
    add_factorial(pp, whole(a + b - c), 1);
    add_factorial(pp, whole(a - b + c), 1);
    add_factorial(pp, whole(-a + b + c), 1);
    add_factorial(pp, whole(a + b + c) + 1, -1);
}

// Twice-valued 6-j; 0 unless all four triads are valid.
SurdSum sixj_raw(int j1, int j2, int j3, int j4, int j5, int j6)
{
    if (!is_triad(j1, j2, j3) || !is_triad(j1, j5, j6) || !is_triad(j4, j2, j6) || !is_triad(j4, j5, j3)) {
        return SurdSum();
    }
    PrimePowers pp;
    add_delta(pp, j1, j2, j3);
    add_delta(pp, j1, j5, j6);
    add_delta(pp, j4, j2, j6);
    add_delta(pp, j4, j5, j3);

    const long a1 = whole(j1 + j2 + j3);
    const long a2 = whole(j1 + j5 + j6);
    const long a3 = whole(j4 + j2 + j6);
    const long a4 = whole(j4 + j5 + j3);
    const long b1 = whole(j1 + j2 + j4 + j5);
    const long b2 = whole(j2 + j3 + j5 + j6);
    const long b3 = whole(j3 + j1 + j6 + j4);
    const long lo = std::max({a1, a2, a3, a4});
    const long hi = std::min({b1, b2, b3});

    Rational sum;
    for (long t = lo; t <= hi; ++t) {
        const Integer den = factorial(t - a1) * factorial(t - a2) * factorial(t - a3) * factorial(t - a4) *
                            factorial(b1 - t) * factorial(b2 - t) * factorial(b3 - t);
        const Rational term(factorial(t + 1), den);
        sum += t % 2 == 0 ? term : -term;
    }
    return sqrt_of(pp) * sum;
}

} // namespace

std::string HalfInt::str() const
{
    if (is_integer()) {
        return std::to_string(twice / 2);
    }
    return std::to_string(twice) + "/2";
}

HalfInt HalfInt::parse(std::string_view text)
{
    auto to_int = [&](std::string_view part) {
        int v = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        if (first != last && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last) {
            throw ParseError("not a half-integer: '" + std::string(text) + "'", static_cast<std::size_t>(ptr - text.data()));
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return whole(to_int(text));
    }
    if (text.substr(slash + 1) != "2") {
        throw ParseError("half-integer denominator must be 2: '" + std::string(text) + "'", slash + 1);
    }
    const int num = to_int(text.substr(0, slash));
    if (num % 2 == 0) {
        return whole(num / 2);
    }
    return from_twice(num);
}

SurdSum wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3)
{
    require_nonnegative({j1, j2, j3}, "wigner3j");
    const std::array<std::pair<HalfInt, HalfInt>, 3> jm{{{j1, m1}, {j2, m2}, {j3, m3}}};
    for (const auto& [j, m] : jm) {
        if ((j.twice + m.twice) % 2 != 0) {
            throw PreconditionError("wigner3j: j=" + j.str() + " and m=" + m.str() + " differ by a half-integer");
        }
        if (std::abs(m.twice) > j.twice) {
            throw PreconditionError("wigner3j: |m|=" + m.str() + " exceeds j=" + j.str());
        }
    }
    if (m1.twice + m2.twice + m3.twice != 0 || !is_triad(j1.twice, j2.twice, j3.twice)) {
        return SurdSum();
    }

    const int J1 = j1.twice, J2 = j2.twice, J3 = j3.twice;
    const int M1 = m1.twice, M2 = m2.twice, M3 = m3.twice;
    PrimePowers pp;
    add_delta(pp, J1, J2, J3);
    for (const auto& [j, m] : jm) {
        add_factorial(pp, whole(j.twice + m.twice), 1);
        add_factorial(pp, whole(j.twice - m.twice), 1);
    }

    const long lo = std::max({0L, whole(J2 - J3 - M1), whole(J1 - J3 + M2)});
    const long hi = std::min({whole(J1 + J2 - J3), whole(J1 - M1), whole(J2 + M2)});
    Rational sum;
    for (long k = lo; k <= hi; ++k) {
        const Integer den = factorial(k) * factorial(whole(J3 - J2 + M1) + k) * factorial(whole(J3 - J1 - M2) + k) *
                            factorial(whole(J1 + J2 - J3) - k) * factorial(whole(J1 - M1) - k) *
                            factorial(whole(J2 + M2) - k);
        const Rational term(1, den);
        sum += k % 2 == 0 ? term : -term;
    }
    return sqrt_of(pp) * (sum * Rational(phase(J1 - J2 - M3)));
}

SurdSum wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6)
{
    require_nonnegative({j1, j2, j3, j4, j5, j6}, "wigner6j");
    require_integral_perimeter(j1, j2, j3, "wigner6j");
    require_integral_perimeter(j1, j5, j6, "wigner6j");
    require_integral_perimeter(j4, j2, j6, "wigner6j");
    require_integral_perimeter(j4, j5, j3, "wigner6j");
    return sixj_raw(j1.twice, j2.twice, j3.twice, j4.twice, j5.twice, j6.twice);
}

NineJArray NineJArray::from_twice(const std::array<int, 9>& twice)
{
    NineJArray out;
    for (int k = 0; k < 9; ++k) {
        out.rows[k / 3][k % 3] = HalfInt::from_twice(twice[k]);
    }
    return out;
}

NineJArray NineJArray::transposed() const
{
    NineJArray out;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            out.rows[a][b] = rows[b][a];
        }
    }
    return out;
}

NineJArray NineJArray::with_rows_swapped(int a, int b) const
{
    NineJArray out = *this;
    std::swap(out.rows.at(a), out.rows.at(b));
    return out;
}

NineJArray NineJArray::with_columns_swapped(int a, int b) const
{
    return transposed().with_rows_swapped(a, b).transposed();
}

int NineJArray::twice_entry_sum() const
{
    int s = 0;
    for (const auto& row : rows) {
        for (HalfInt j : row) {
            s += j.twice;
        }
    }
    return s;
}

std::string NineJArray::str() const
{
    std::string out = "{";
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            out += rows[a][b].str();
            out += b < 2 ? " " : (a < 2 ? "; " : "}");
        }
    }
    return out;
}

SurdSum wigner9j(const NineJArray& arr)
{
    for (int a = 0; a < 3; ++a) {
        require_nonnegative({arr.at(a, 0), arr.at(a, 1), arr.at(a, 2)}, "wigner9j");
        require_integral_perimeter(arr.at(a, 0), arr.at(a, 1), arr.at(a, 2), "wigner9j");
        require_integral_perimeter(arr.at(0, a), arr.at(1, a), arr.at(2, a), "wigner9j");
    }
    for (int a = 0; a < 3; ++a) {
        if (!is_triad(arr.at(a, 0).twice, arr.at(a, 1).twice, arr.at(a, 2).twice) ||
            !is_triad(arr.at(0, a).twice, arr.at(1, a).twice, arr.at(2, a).twice)) {
            return SurdSum();
        }
    }

    const int j1 = arr.at(0, 0).twice, j2 = arr.at(0, 1).twice, j3 = arr.at(0, 2).twice;
    const int j4 = arr.at(1, 0).twice, j5 = arr.at(1, 1).twice, j6 = arr.at(1, 2).twice;
    const int j7 = arr.at(2, 0).twice, j8 = arr.at(2, 1).twice, j9 = arr.at(2, 2).twice;

    const int lo = std::max({std::abs(j1 - j9), std::abs(j4 - j8), std::abs(j2 - j6)});
    const int hi = std::min({j1 + j9, j4 + j8, j2 + j6});
    SurdSum sum;
    for (int x = lo; x <= hi; x += 2) {
        const SurdSum product =
            sixj_raw(j1, j4, j7, j8, j9, x) * sixj_raw(j2, j5, j8, j4, x, j6) * sixj_raw(j3, j6, j9, x, j1, j2);
        sum += product * Rational(phase(2 * x) * (x + 1));
    }
    return sum;
}

CombinantArrays combinant_9j_array(int d, int r, int i, int j)
{
    require_term_range(d, r, i, j);
    const NineJArray b = NineJArray::from_twice({d, d, 2 * (d - 2 * i + 1),
                                                 d, d, 2 * (d - 2 * j + 1),
                                                 2 * (d - 1), 2 * (d - 2 * r + 1), 2 * (2 * d - 2 * r)});
    const NineJArray b_prime = b.with_rows_swapped(0, 1).with_rows_swapped(0, 2).with_columns_swapped(1, 2);
    return {b, b_prime};
}

bool equivalence_check(const NineJArray& b, const NineJArray& b_prime)
{
    return wigner9j(b) == wigner9j(b_prime);
}

} // namespace pencil
