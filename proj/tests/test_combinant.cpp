#include "support.hpp"

#include "pencil/combinant.hpp"
#include "pencil/error.hpp"
#include "pencil/transvectant.hpp"

#include <doctest.h>

using namespace pencil;

TEST_CASE("pencil construction")
{
    const BinaryForm a = BinaryForm::monomial(3, 0);
    const BinaryForm b = BinaryForm::monomial(3, 3);
    CHECK_NOTHROW(Pencil(a, b));
    CHECK_THROWS_AS(Pencil(a, BinaryForm::monomial(4, 0)), DegreeMismatch);
    CHECK_THROWS_AS(Pencil(BinaryForm::monomial(1, 0), BinaryForm::monomial(1, 1)), PreconditionError);
    CHECK_THROWS_AS(Pencil(a, a * Rational(-3, 2)), DegeneratePencil);
    CHECK_THROWS_AS(Pencil(a, BinaryForm(3)), DegeneratePencil);
}

TEST_CASE("combinants of x1^3 and x2^3")
{
    const CombinantSequence seq = combinant_sequence(Pencil(BinaryForm::monomial(3, 0), BinaryForm::monomial(3, 3)));
    REQUIRE(seq.entries.size() == 2);
    CHECK(seq.at(1) == BinaryForm::monomial(4, 2));
    CHECK(seq.at(2) == BinaryForm::constant(1));
    CHECK_THROWS(seq.at(3));
}

TEST_CASE("combinant orders and invariance")
{
    const CombinantSequence seq7 = combinant_sequence(random_pencil(7, 1, 10));
    std::vector<int> orders;
    for (const auto& c : seq7.entries) {
        orders.push_back(c.order());
    }
    CHECK(orders == std::vector<int>{12, 8, 4, 0});

    IntegerSource src(31);
    for (int trial = 0; trial < 12; ++trial) {
        const int d = static_cast<int>(src.uniform(2, 8));
        const Pencil p = random_pencil(d, static_cast<std::uint64_t>(100 + trial), 10);
        const Rational al = src.nonzero_rational(5), be = src.nonzero_rational(5);
        const Rational ga = src.nonzero_rational(5), de = src.nonzero_rational(5);
        const BinaryForm a2 = form_add(p.a(), p.b(), al, be);
        const BinaryForm b2 = form_add(p.a(), p.b(), ga, de);
        const CombinantSequence seq = combinant_sequence(p);
        for (int r = 1; r <= CombinantSequence::length_for(d); ++r) {
            CAPTURE(d);
            CAPTURE(r);
            CHECK(transvectant(a2, b2, 2 * r - 1) == seq.at(r) * (al * de - be * ga));
        }
        const CombinantSequence swapped = combinant_sequence(Pencil(p.b(), p.a()));
        for (int r = 1; r <= CombinantSequence::length_for(d); ++r) {
            CHECK(swapped.at(r) == -seq.at(r));
        }
    }
}

TEST_CASE("random pencils are deterministic and share the stream with random_form")
{
    const Pencil p = random_pencil(6, 77, 10);
    const Pencil q = random_pencil(6, 77, 10);
    CHECK(p.a() == q.a());
    CHECK(p.b() == q.b());
    CHECK(p.a() == random_form(6, 77, 10));
}

TEST_CASE("wronskian and membership defect agree on vanishing")
{
    const Pencil small(BinaryForm::monomial(2, 0), BinaryForm::monomial(2, 2));
    CHECK_THROWS_AS(membership_defect(small, BinaryForm::monomial(2, 1)), PreconditionError);
    CHECK_FALSE(wronskian(small, BinaryForm::monomial(2, 1)).is_zero());

    IntegerSource src(32);
    for (int d : {3, 4, 5, 6, 7}) {
        for (int trial = 0; trial < 8; ++trial) {
            const Pencil p = random_pencil(d, static_cast<std::uint64_t>(1000 * d + trial), 10);
            CHECK_THROWS_AS(membership_defect(p, BinaryForm::monomial(d + 1, 0)), PreconditionError);
            CHECK_THROWS_AS(wronskian(p, BinaryForm::monomial(d - 1, 0)), PreconditionError);

            CHECK(wronskian(p, p.a()).is_zero());
            CHECK(wronskian(p, form_add(p.a(), p.b(), 3, -5)).is_zero());
            CHECK(membership_defect(p, p.a()).is_zero());
            CHECK(membership_defect(p, p.b()).is_zero());

            const BinaryForm inside = form_add(p.a(), p.b(), src.nonzero_rational(7), src.nonzero_rational(7));
            const BinaryForm wi = wronskian(p, inside);
            const BinaryForm mi = membership_defect(p, inside);
            CHECK(wi.order() == 3 * (d - 2));
            CHECK(mi.order() == 3 * d - 6);
            CHECK(wi.is_zero());
            CHECK(mi.is_zero());

            const BinaryForm outside = random_form(d, src, 10);
            CHECK(wronskian(p, outside).is_zero() == membership_defect(p, outside).is_zero());
            // outside forms drawn at random essentially never land in the pencil
            CHECK_FALSE(membership_defect(p, outside).is_zero());
        }
    }
}
