#include "angular_oracle.hpp"

#include "pencil/error.hpp"
#include "pencil/random.hpp"
#include "pencil/surd.hpp"
#include "pencil/wigner.hpp"

#include <doctest.h>

using namespace pencil;
using H = HalfInt;

namespace {

SurdSum sixj_twice(int a, int b, int c, int d, int e, int f)
{
    return wigner6j(H::from_twice(a), H::from_twice(b), H::from_twice(c), H::from_twice(d), H::from_twice(e),
                    H::from_twice(f));
}

int sign_of_odd_permutation(const NineJArray& a) { return (a.twice_entry_sum() / 2) % 2 == 0 ? 1 : -1; }

} // namespace

TEST_CASE("surd arithmetic normalizes")
{
    CHECK(split_square(Integer(72)) == std::pair<Integer, Integer>(6, 2));
    CHECK(split_square(Integer(1)) == std::pair<Integer, Integer>(1, 1));
    CHECK(SurdSum::term(Rational(1), Integer(8)) == SurdSum::term(Rational(2), Integer(2)));
    CHECK(SurdSum::term(Rational(3), Integer(9)) == SurdSum(9));
    CHECK(SurdSum::term(Rational(5), Integer(0)).is_zero());
    CHECK(SurdSum::term(Rational(1), Integer(2)) * SurdSum::term(Rational(1), Integer(6)) ==
          SurdSum::term(Rational(2), Integer(3)));
    CHECK(SurdSum::root(Rational(1, 3)) == SurdSum::term(Rational(1, 3), Integer(3)));
    CHECK(SurdSum::root(Rational(4, 9)) == SurdSum(Rational(2, 3)));

    const SurdSum s = SurdSum(Rational(1, 2)) - SurdSum::term(Rational(1, 6), Integer(3));
    CHECK(s.str() == "1/2 - 1/6*sqrt(3)");
    CHECK_FALSE(s.is_single_term());
    CHECK((s - s).is_zero());
    CHECK(SurdSum().str() == "0");
    CHECK(SurdSum::term(Rational(1), Integer(2)).str() == "sqrt(2)");
    CHECK(SurdSum::term(Rational(1, 6), Integer(3)).str() == "1/6*sqrt(3)");
    CHECK_THROWS_AS(SurdSum::term(Rational(1), Integer(-2)), PreconditionError);
}

TEST_CASE("half integers")
{
    CHECK(H::parse("7/2") == H::from_twice(7));
    CHECK(H::parse("3") == H::whole(3));
    CHECK(H::parse("-1/2").str() == "-1/2");
    CHECK(H::from_twice(6).str() == "3");
    CHECK_THROWS_AS(H::parse("3/4"), ParseError);
    CHECK_THROWS_AS(H::parse("x"), ParseError);
}

TEST_CASE("3-j symbols")
{
    CHECK(wigner3j(H::whole(1), H::whole(1), H::whole(1), H::whole(1), H::whole(-1), H::whole(0)) ==
          SurdSum::term(Rational(1, 6), Integer(6)));
    CHECK(wigner3j(H::whole(1), H::whole(1), H::whole(1), H::whole(1), H::whole(0), H::whole(0)).is_zero());
    CHECK(wigner3j(H::whole(1), H::whole(1), H::whole(3), H::whole(0), H::whole(0), H::whole(0)).is_zero());
    CHECK_THROWS_AS(wigner3j(H::whole(1), H::whole(1), H::whole(1), H::whole(2), H::whole(-2), H::whole(0)),
                    PreconditionError);
    CHECK_THROWS_AS(wigner3j(H::whole(-1), H::whole(1), H::whole(1), H::whole(0), H::whole(0), H::whole(0)),
                    PreconditionError);
    CHECK_THROWS_AS(wigner3j(H::whole(1), H::whole(1), H::whole(1), H::from_twice(1), H::from_twice(-1), H::whole(0)),
                    PreconditionError);

    // orthogonality over (m1, m2) for every admissible pair of couplings
    testing::ThreeJCache cache;
    for (int j1 = 0; j1 <= 4; ++j1) {
        for (int j2 = 0; j2 <= 4; ++j2) {
            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2) {
                for (int k3 = std::abs(j1 - j2); k3 <= j1 + j2; k3 += 2) {
                    for (int m3 : testing::projections(std::min(j3, k3))) {
                        SurdSum sum;
                        for (int m1 : testing::projections(j1)) {
                            const int m2 = -m1 - m3;
                            if (!testing::fits(m2, j2)) {
                                continue;
                            }
                            sum += cache.get(j1, j2, j3, m1, m2, m3) * cache.get(j1, j2, k3, m1, m2, m3);
                        }
                        CHECK(sum * Rational(j3 + 1) == SurdSum(j3 == k3 ? 1 : 0));
                    }
                }
            }
        }
    }
}

TEST_CASE("6-j symbols")
{
    CHECK(sixj_twice(2, 2, 2, 2, 2, 2) == SurdSum(Rational(1, 6)));
    CHECK(sixj_twice(1, 1, 2, 1, 1, 0) == SurdSum(Rational(1, 2)));
    CHECK(sixj_twice(1, 3, 2, 4, 2, 1) == SurdSum::term(Rational(1, 6), Integer(3)));
    CHECK(sixj_twice(4, 4, 4, 3, 1, 3) == SurdSum::term(Rational(1, 20), Integer(14)));
    CHECK(sixj_twice(2, 4, 2, 4, 2, 2) == SurdSum::term(Rational(-1, 10), Integer(5)));
    CHECK(sixj_twice(2, 2, 6, 2, 2, 2).is_zero());
    CHECK_THROWS_AS(sixj_twice(1, 1, 1, 1, 1, 1), PreconditionError);
    CHECK_THROWS_AS(sixj_twice(-2, 2, 2, 2, 2, 2), PreconditionError);

    testing::ThreeJCache cache;
    IntegerSource src(61);
    int checked = 0;
    while (checked < 60) {
        std::array<int, 6> j{};
        for (int& v : j) {
            v = static_cast<int>(src.uniform(0, 4));
        }
        auto triad = [&](int a, int b, int c) {
            return testing::parity_ok(j[a], j[b], j[c]) && testing::triangle_ok(j[a], j[b], j[c]);
        };
        if (!triad(0, 1, 2) || !triad(0, 4, 5) || !triad(3, 1, 5) || !triad(3, 4, 2)) {
            continue;
        }
        CAPTURE(j[0]);
        CAPTURE(j[1]);
        CAPTURE(j[2]);
        CAPTURE(j[3]);
        CAPTURE(j[4]);
        CAPTURE(j[5]);
        CHECK(sixj_twice(j[0], j[1], j[2], j[3], j[4], j[5]) == testing::sixj_by_contraction(j, cache));
        ++checked;
    }
}

TEST_CASE("9-j frozen values")
{
    CHECK(wigner9j(NineJArray::from_twice({2, 2, 4, 2, 2, 4, 4, 4, 0})) == SurdSum(Rational(1, 150)));
    CHECK(wigner9j(NineJArray::from_twice({4, 2, 2, 2, 4, 2, 2, 2, 4})) == SurdSum(Rational(23, 450)));
    CHECK(wigner9j(NineJArray::from_twice({3, 2, 1, 2, 2, 2, 1, 2, 1})) == SurdSum(Rational(1, 12)));
    CHECK(wigner9j(NineJArray::from_twice({2, 2, 4, 2, 2, 0, 4, 0, 4})) == SurdSum(Rational(1, 15)));
    CHECK(wigner9j(NineJArray::from_twice({2, 2, 2, 2, 2, 2, 2, 2, 2})).is_zero());
    CHECK(wigner9j(NineJArray::from_twice({2, 2, 6, 2, 2, 2, 2, 2, 2})).is_zero());
    CHECK_THROWS_AS(wigner9j(NineJArray::from_twice({1, 1, 1, 2, 2, 2, 2, 2, 2})), PreconditionError);
    CHECK_THROWS_AS(wigner9j(NineJArray::from_twice({-2, 2, 0, 2, 2, 2, 0, 2, 2})), PreconditionError);
}

TEST_CASE("9-j against the magnetic sum and its symmetries")
{
    testing::ThreeJCache cache;
    const auto arrays = testing::admissible_ninej_arrays(2);
    REQUIRE(arrays.size() > 50);
    for (const NineJArray& a : arrays) {
        CAPTURE(a.str());
        const SurdSum v = wigner9j(a);
        CHECK(v == testing::ninej_by_magnetic_sum(a, cache));
        CHECK(wigner9j(a.transposed()) == v);
        CHECK(wigner9j(a.with_rows_swapped(0, 1).with_rows_swapped(1, 2)) == v);
        CHECK(wigner9j(a.with_columns_swapped(0, 2).with_columns_swapped(0, 1)) == v);
        CHECK(wigner9j(a.with_rows_swapped(0, 2)) == v * Rational(sign_of_odd_permutation(a)));
        CHECK(wigner9j(a.with_columns_swapped(1, 2)) == v * Rational(sign_of_odd_permutation(a)));
    }
}

TEST_CASE("combinant arrays")
{
    const CombinantArrays arr = combinant_9j_array(7, 3, 1, 2);
    CHECK(arr.b.str() == "{7/2 7/2 6; 7/2 7/2 4; 6 2 8}");
    CHECK(arr.b_prime.str() == "{6 8 2; 7/2 6 7/2; 7/2 4 7/2}");
    CHECK(arr.b.twice_entry_sum() % 4 == 0);
    const SurdSum expected = SurdSum::term(Rational(1, 6006), Integer(114));
    CHECK(wigner9j(arr.b) == expected);
    CHECK(wigner9j(arr.b_prime) == expected);
    CHECK(equivalence_check(arr.b, arr.b_prime));
    CHECK_THROWS_AS(combinant_9j_array(7, 5, 1, 1), PreconditionError);
    CHECK_THROWS_AS(combinant_9j_array(7, 3, 3, 2), PreconditionError);

    for (int d = 5; d <= 9; ++d) {
        for (int r = 3; r <= (d + 1) / 2; ++r) {
            for (int i = 1; i <= r; ++i) {
                for (int j = 1; i + j <= r + 1; ++j) {
                    const CombinantArrays c = combinant_9j_array(d, r, i, j);
                    CHECK(c.b.twice_entry_sum() % 4 == 0);
                    CHECK(equivalence_check(c.b, c.b_prime));
                }
            }
        }
    }
}
