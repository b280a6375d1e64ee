#include "pencil/combinant.hpp"

#include "pencil/error.hpp"
#include "pencil/random.hpp"
#include "pencil/transvectant.hpp"

#include <array>

namespace pencil {

Pencil::Pencil(BinaryForm a, BinaryForm b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_.order() != b_.order()) {
        throw DegreeMismatch("pencil generators of orders " + std::to_string(a_.order()) + " and " +
                             std::to_string(b_.order()));
    }
    if (a_.order() < 2) {
        throw PreconditionError("pencil needs order d >= 2");
    }
    c1_ = transvectant(a_, b_, 1);
    if (c1_.is_zero()) {
        throw DegeneratePencil("pencil generators are linearly dependent: (A,B)_1 = 0");
    }
}

const BinaryForm& CombinantSequence::at(int r) const
{
    if (r < 1 || r > static_cast<int>(entries.size())) {
        throw PreconditionError("combinant index r=" + std::to_string(r) + " outside 1.." +
                                std::to_string(entries.size()));
    }
    return entries[static_cast<std::size_t>(r) - 1];
}

Pencil random_pencil(int d, std::uint64_t seed, int bound)
{
    if (d < 2 || bound < 1) {
        throw PreconditionError("random_pencil needs d >= 2 and bound >= 1");
    }
    IntegerSource source(seed);
    BinaryForm a = random_form(d, source, bound);
    for (;;) {
        BinaryForm b = random_form(d, source, bound);
        if (!transvectant(a, b, 1).is_zero()) {
            return Pencil(std::move(a), std::move(b));
        }
    }
}

CombinantSequence combinant_sequence(const Pencil& pencil)
{
    const int d = pencil.order();
    CombinantSequence seq;
    seq.d = d;
    seq.entries.push_back(pencil.c1());
    for (int r = 2; r <= CombinantSequence::length_for(d); ++r) {
        seq.entries.push_back(transvectant(pencil.a(), pencil.b(), 2 * r - 1));
    }
    return seq;
}

BinaryForm wronskian(const Pencil& pencil, const BinaryForm& f)
{
    if (f.order() != pencil.order()) {
        throw PreconditionError("wronskian: form of order " + std::to_string(f.order()) + " against pencil of order " +
                                std::to_string(pencil.order()));
    }
    std::array<std::array<BinaryForm, 3>, 3> m;
    const std::array<const BinaryForm*, 3> rows{&pencil.a(), &pencil.b(), &f};
    for (std::size_t i = 0; i < 3; ++i) {
        m[i][0] = form_diff(*rows[i], 2, 0);
        m[i][1] = form_diff(*rows[i], 1, 1);
        m[i][2] = form_diff(*rows[i], 0, 2);
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

BinaryForm membership_defect(const Pencil& pencil, const BinaryForm& f)
{
    const int d = pencil.order();
    if (d < 3) {
        throw PreconditionError("membership_defect needs d >= 3 (C3 must exist)");
    }
    if (f.order() != d) {
        throw PreconditionError("membership_defect: form of order " + std::to_string(f.order()) +
                                " against pencil of order " + std::to_string(d));
    }
    const BinaryForm c3 = transvectant(pencil.a(), pencil.b(), 3);
    return transvectant(pencil.c1(), f, 2) - Rational(d - 2, 4 * d - 6) * (f * c3);
}

} // namespace pencil
