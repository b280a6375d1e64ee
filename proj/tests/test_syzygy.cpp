#include "support.hpp"

#include "pencil/error.hpp"
#include "pencil/syzygy.hpp"
#include "pencil/transvectant.hpp"

#include <doctest.h>

using namespace pencil;

namespace {

// Multiplicity oracle through the Gaussian binomial: the weights of the fourth
// exterior power of S_d are read off q^(-4d) [d+1 choose 4]_{q^2}. Coefficients
// of sum(k) over 4-subsets of {0..d} are built by the recurrence
// [n choose k] = [n-1 choose k-1] q^(n-1) + [n-1 choose k].
std::vector<std::int64_t> subset_sum_counts(int d)
{
    const int n = d + 1;
    // table[k][s] for the current prefix length
    std::vector<std::vector<std::int64_t>> table(5, std::vector<std::int64_t>(4 * n + 1, 0));
    table[0][0] = 1;
    for (int len = 1; len <= n; ++len) {
        for (int k = std::min(len, 4); k >= 1; --k) {
            for (int s = 4 * n; s >= len - 1; --s) {
                table[k][s] += table[k - 1][s - (len - 1)];
            }
        }
    }
    return table[4];
}

std::int64_t dim_by_gaussian_binomial(int d, int r)
{
    const auto counts = subset_sum_counts(d);
    auto at = [&](int s) { return s >= 0 && s < static_cast<int>(counts.size()) ? counts[s] : 0; };
    return at(2 * r) - at(2 * r - 1);
}

} // namespace

TEST_CASE("index set")
{
    const auto idx = syzygy_index_set(3);
    REQUIRE(idx.size() == 4);
    CHECK(idx[0] == TermIndex{1, 1});
    CHECK(idx[1] == TermIndex{1, 2});
    CHECK(idx[2] == TermIndex{2, 2});
    CHECK(idx[3] == TermIndex{1, 3});
    CHECK(syzygy_index_set(4).size() == 6);
    CHECK(term_transvectant_order(3, {1, 1}) == 4);
    CHECK(term_transvectant_order(3, {1, 3}) == 0);
}

TEST_CASE("theta at d=7, r=3")
{
    CHECK(theta(7, 3, 1, 1) == Rational(10));
    CHECK(theta(7, 3, 1, 2) == Rational(-40, 11));
    CHECK(theta(7, 3, 2, 2) == Rational(-175, 121));
    CHECK(theta(7, 3, 1, 3) == Rational(10, 21));

    const SyzygyTable t = syzygy_table(7, 3);
    CHECK(t.alphas.size() == 4);
    CHECK(t.alpha(1, 1) == Rational(10));
    CHECK(t.alpha(1, 2) == Rational(-80, 11));
    CHECK(t.alpha(2, 2) == Rational(-175, 121));
    CHECK(t.alpha(1, 3) == Rational(20, 21));
}

TEST_CASE("table at d=7, r=4 matches the five-term identity for C7")
{
    const SyzygyTable t = syzygy_table(7, 4);
    const Rational lead = -t.alpha(1, 4);
    CHECK(t.alpha(1, 1) / lead == Rational(-28));
    CHECK(t.alpha(1, 2) / lead == Rational(-210, 11));
    CHECK(t.alpha(1, 3) / lead == Rational(8));
    CHECK(t.alpha(2, 2) / lead == Rational(1960, 121));
    CHECK(t.alpha(2, 3) / lead == Rational(35, 11));
}

TEST_CASE("theta symmetry, boundary value and ranges")
{
    for (int d = 5; d <= 25; ++d) {
        for (int r = 3; r <= (d + 1) / 2; ++r) {
            CAPTURE(d);
            CAPTURE(r);
            CHECK(theta(d, r, 1, 1) == Rational(2 * (r - 2) * (2 * r - 1)));
            CHECK(syzygy_table(d, r).alpha(1, r).sign() > 0);
            for (const TermIndex& ij : syzygy_index_set(r)) {
                CHECK(theta(d, r, ij.i, ij.j) == theta(d, r, ij.j, ij.i));
            }
        }
    }
    CHECK_THROWS_AS(theta(7, 2, 1, 1), PreconditionError);
    CHECK_THROWS_AS(theta(7, 5, 1, 1), PreconditionError);
    CHECK_THROWS_AS(theta(7, 3, 2, 3), PreconditionError);
    CHECK_THROWS_AS(theta(7, 3, 0, 1), PreconditionError);
    CHECK_THROWS_AS(syzygy_table(4, 3), PreconditionError);
}

TEST_CASE("syzygy vanishes and recovery is exact")
{
    for (int d = 5; d <= 9; ++d) {
        for (int r = 3; r <= (d + 1) / 2; ++r) {
            const Pencil p = random_pencil(d, static_cast<std::uint64_t>(10 * d + r), 10);
            CAPTURE(d);
            CAPTURE(r);
            const BinaryForm s = evaluate_syzygy(p, r);
            CHECK(s.is_zero());
            CHECK(s.order() == 4 * (d - r));
            const BinaryForm direct = transvectant(p.a(), p.b(), 2 * r - 1);
            CHECK(recover_combinant(p, r) == direct);
            CHECK(recover_combinant(combinant_sequence(p), r) == direct);
        }
    }
}

TEST_CASE("recovery from a sequence validates its input")
{
    const Pencil p = random_pencil(7, 3, 10);
    CombinantSequence seq = combinant_sequence(p);

    CombinantSequence short_seq{7, {seq.at(1)}};
    CHECK_THROWS_AS(recover_combinant(short_seq, 3), PreconditionError);

    CombinantSequence wrong = seq;
    wrong.entries[1] = BinaryForm(5);
    CHECK_THROWS_AS(recover_combinant(wrong, 3), DegreeMismatch);

    CombinantSequence zero = seq;
    zero.entries[0] = BinaryForm(12);
    CHECK_THROWS_AS(recover_combinant(zero, 3), DegeneratePencil);

    // a corrupted C3 leaves a remainder on division by C1
    CombinantSequence corrupted = seq;
    corrupted.entries[1] += BinaryForm::monomial(8, 3);
    CHECK_THROWS_AS(recover_combinant(corrupted, 3), NotDivisible);
}

TEST_CASE("gamma and the positivity certificate")
{
    CHECK(gamma(3, 7) == Rational(11, 21));
    for (int r = 3; r <= 10; ++r) {
        CHECK(gamma(r, 2 * r - 1) == Rational(2, r));
    }
    for (int r = 3; r <= 8; ++r) {
        for (int d = 2 * r - 1; d < 40; ++d) {
            CHECK(gamma(r, d + 1) < gamma(r, d));
        }
    }
    const PositivityCertificate c = positivity_certificate(3, 7);
    CHECK(c.gamma == Rational(11, 21));
    CHECK(c.boundary_value == Rational(2, 3));
    CHECK(c.dn_difference == Rational(2 * 1 * 5 * 4));
    CHECK(c.dn_factored == c.dn_difference);
    CHECK(positivity_certificate(3, 5).dn_difference == Rational(2 * 1 * 5 * 2));
    CHECK_THROWS_AS(gamma(2, 7), PreconditionError);
    CHECK_THROWS_AS(gamma(4, 6), PreconditionError);
    CHECK_THROWS_AS(positivity_certificate(2, 9), PreconditionError);
    for (int d = 5; d <= 20; ++d) {
        for (int r = 3; r <= (d + 1) / 2; ++r) {
            CHECK(theta(d, r, 1, r) == Rational(1) - gamma(r, d));
        }
    }
}

TEST_CASE("syzygy space dimension")
{
    CHECK(syzygy_space_dim(7, 1) == 0);
    CHECK(syzygy_space_dim(7, 2) == 0);
    CHECK(syzygy_space_dim(7, 3) == 1);
    CHECK(syzygy_space_dim(7, 4) == 1);
    for (int d = 4; d <= 30; ++d) {
        for (int r = 1; r <= (d + 1) / 2; ++r) {
            CAPTURE(d);
            CAPTURE(r);
            CHECK(syzygy_space_dim(d, r) == dim_by_gaussian_binomial(d, r));
            if (r >= 3) {
                CHECK(syzygy_space_dim(d, r) >= 1);
            } else {
                CHECK(syzygy_space_dim(d, r) == 0);
            }
        }
    }
    CHECK_THROWS_AS(syzygy_space_dim(3, 1), PreconditionError);
    CHECK_THROWS_AS(syzygy_space_dim(7, 5), PreconditionError);
    CHECK_THROWS_AS(syzygy_space_dim(7, 0), PreconditionError);
}
