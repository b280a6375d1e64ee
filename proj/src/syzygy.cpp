#include "pencil/syzygy.hpp"

#include "pencil/error.hpp"
#include "pencil/transvectant.hpp"

namespace pencil {

namespace {

long fact_arg(long n, const char* what)
{
    if (n < 0) {
        throw PreconditionError(std::string("negative factorial argument in ") + what);
    }
    return n;
}

// Sum over the index set, skipping (1, r) when asked.
BinaryForm syzygy_sum(const SyzygyTable& table, const CombinantSequence& seq, bool skip_leading)
{
    const int d = table.d;
    const int r = table.r;
    BinaryForm sum(4 * (d - r));
    for (const auto& [ij, alpha] : table.alphas) {
        if (skip_leading && ij.i == 1 && ij.j == r) {
            continue;
        }
        sum += alpha * transvectant(seq.at(ij.i), seq.at(ij.j), term_transvectant_order(r, ij));
    }
    return sum;
}

BinaryForm recover_from(const CombinantSequence& seq, int r)
{
    const SyzygyTable table = syzygy_table(seq.d, r);
    const BinaryForm rest = syzygy_sum(table, seq, true);
    return exact_divide(-rest, seq.at(1)) * (Rational(1) / table.alpha(1, r));
}

} // namespace

std::vector<TermIndex> syzygy_index_set(int r)
{
    std::vector<TermIndex> out;
    for (int j = 1; j <= r; ++j) {
        for (int i = 1; i <= j && i + j <= r + 1; ++i) {
            out.push_back({i, j});
        }
    }
    return out;
}

void require_syzygy_range(int d, int r)
{
    if (r < 3 || r > (d + 1) / 2) {
        throw PreconditionError("weight parameter r=" + std::to_string(r) + " outside 3.." +
                                std::to_string((d + 1) / 2) + " for d=" + std::to_string(d));
    }
}

void require_term_range(int d, int r, int i, int j)
{
    require_syzygy_range(d, r);
    if (i < 1 || j < 1 || i > r || j > r || i + j > r + 1) {
        throw PreconditionError("term index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside 1 <= i,j <= r, i+j <= r+1 for r=" + std::to_string(r));
    }
}

Rational theta(int d, int r, int i, int j)
{
    require_term_range(d, r, i, j);
    const long D = d;
    const long R = r;
    const long I = i;
    const long J = j;
    const Integer lead = 2 * D * I + 2 * D * J - D * R - 2 * I * I - 2 * J * J - 2 * D + 3 * I + 3 * J - 2;
    const Integer n1 = lead * factorial(D) * factorial(D - 1) * factorial(2 * R - 1) *
                       factorial(fact_arg(2 * D - 4 * I + 3, "N1")) * factorial(fact_arg(2 * D - 4 * J + 3, "N1"));
    const Integer n2 = factorial(2 * I - 1) * factorial(2 * J - 1) * factorial(fact_arg(D - 2 * I + 1, "N2")) *
                       factorial(fact_arg(D - 2 * J + 1, "N2")) * factorial(2 * D - 2 * I + 2) *
                       factorial(2 * D - 2 * J + 2) * factorial(fact_arg(2 * R - 2 * I - 2 * J + 2, "N2"));
    const int kronecker = ((i == 1 && j == r) ? 1 : 0) + ((i == r && j == 1) ? 1 : 0);
    return Rational(kronecker) - Rational(8) * Rational(n1, n2);
}

SyzygyTable syzygy_table(int d, int r)
{
    require_syzygy_range(d, r);
    SyzygyTable table{d, r, {}};
    for (const TermIndex& ij : syzygy_index_set(r)) {
        const Rational eps = ij.i == ij.j ? 1 : 2;
        table.alphas.emplace(ij, eps * theta(d, r, ij.i, ij.j));
    }
    if (table.alpha(1, r).sign() <= 0) {
        throw FormulaViolation("alpha_{1,r} is not positive for d=" + std::to_string(d) + ", r=" + std::to_string(r));
    }
    return table;
}

BinaryForm evaluate_syzygy(const Pencil& pencil, int r)
{
    require_syzygy_range(pencil.order(), r);
    const CombinantSequence seq = combinant_sequence(pencil);
    return syzygy_sum(syzygy_table(pencil.order(), r), seq, false);
}

BinaryForm recover_combinant(const Pencil& pencil, int r)
{
    require_syzygy_range(pencil.order(), r);
    CombinantSequence seq;
    seq.d = pencil.order();
    seq.entries.push_back(pencil.c1());
    for (int k = 2; k < r; ++k) {
        seq.entries.push_back(transvectant(pencil.a(), pencil.b(), 2 * k - 1));
    }
    return recover_from(seq, r);
}

BinaryForm recover_combinant(const CombinantSequence& sequence, int r)
{
    const int d = sequence.d;
    require_syzygy_range(d, r);
    if (static_cast<int>(sequence.entries.size()) < r - 1) {
        throw PreconditionError("recovering C_" + std::to_string(2 * r - 1) + " needs C_1..C_" +
                                std::to_string(2 * r - 3));
    }
    for (int k = 1; k < r; ++k) {
        if (sequence.at(k).order() != CombinantSequence::order_of(d, k)) {
            throw DegreeMismatch("C_" + std::to_string(2 * k - 1) + " should have order " +
                                 std::to_string(CombinantSequence::order_of(d, k)));
        }
    }
    if (sequence.at(1).is_zero()) {
        throw DegeneratePencil("C_1 is the zero form");
    }
    CombinantSequence head{d, {sequence.entries.begin(), sequence.entries.begin() + (r - 1)}};
    return recover_from(head, r);
}

Rational gamma(int r, int d)
{
    if (r < 3 || d < 2 * r - 1) {
        throw PreconditionError("gamma needs r >= 3 and d >= 2r-1, got r=" + std::to_string(r) + ", d=" +
                                std::to_string(d));
    }
    const long D = d;
    const long R = r;
    const Integer num = Integer(4 * (D * R - 2 * R * R + 3 * R - 1)) * factorial(D - 1) * factorial(2 * D - 4 * R + 3);
    const Integer den = factorial(D - 2 * R + 1) * factorial(2 * D - 2 * R + 2);
    return Rational(num, den);
}

PositivityCertificate positivity_certificate(int r, int d)
{
    PositivityCertificate cert;
    cert.r = r;
    cert.d = d;
    cert.gamma = gamma(r, d);
    cert.boundary_value = gamma(r, 2 * r - 1);

    const long D = d;
    const long R = r;
    const Integer n = Integer(D) * (D * R + 4 * R - 2 * R * R - 1) * (2 * D - 4 * R + 5);
    const Integer den = Integer(D * R - 2 * R * R + 3 * R - 1) * (2 * D - 2 * R + 3) * (D - R + 2);
    cert.dn_difference = Rational(Integer(den - n));
    cert.dn_factored = Rational(Integer(Integer((R - 1) * (R - 2) * (2 * R - 1)) * (D - 2 * R + 3)));

    const std::string where = " at r=" + std::to_string(r) + ", d=" + std::to_string(d);
    if (cert.boundary_value != Rational(2, R)) {
        throw FormulaViolation("Gamma(r,2r-1) != 2/r" + where);
    }
    if (cert.dn_difference != cert.dn_factored) {
        throw FormulaViolation("D - N does not factor" + where);
    }
    if (gamma(r, d + 1) / cert.gamma != Rational(n, den)) {
        throw FormulaViolation("Gamma(r,d+1)/Gamma(r,d) != N/D" + where);
    }
    if (!(cert.gamma < Rational(1))) {
        throw FormulaViolation("Gamma(r,d) >= 1" + where);
    }
    return cert;
}

std::int64_t syzygy_space_dim(int d, int r)
{
    if (d < 4 || r < 1 || r > (d + 1) / 2) {
        throw PreconditionError("syzygy_space_dim needs d >= 4 and 1 <= r <= floor((d+1)/2)");
    }
    // A 4-subset {k1<k2<k3<k4} of {0..d} has weight sum(d - 2k) = 4d - 2 sum(k);
    // weight 4(d-r) means sum(k) = 2r, weight 4(d-r)+2 means sum(k) = 2r-1.
    auto count_with_sum = [d](int target) {
        std::int64_t n = 0;
        for (int a = 0; a <= d; ++a) {
            for (int b = a + 1; b <= d; ++b) {
                for (int c = b + 1; c <= d; ++c) {
                    const int rest = target - a - b - c;
                    if (rest > c && rest <= d) {
                        ++n;
                    }
                }
            }
        }
        return n;
    };
    return count_with_sum(2 * r) - count_with_sum(2 * r - 1);
}

} // namespace pencil
