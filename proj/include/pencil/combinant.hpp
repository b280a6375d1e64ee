#pragma once

#include "pencil/binary_form.hpp"

#include <cstdint>
#include <vector>

namespace pencil {

/// The pencil {A + lambda B} of two independent forms of the same order d >= 2.
class Pencil {
public:
    /// Throws DegreeMismatch for unequal orders, PreconditionError for d < 2,
    /// DegeneratePencil when (A,B)_1 vanishes.
    Pencil(BinaryForm a, BinaryForm b);

    int order() const noexcept { return a_.order(); }
    const BinaryForm& a() const noexcept { return a_; }
    const BinaryForm& b() const noexcept { return b_; }
    /// (A,B)_1, computed once on construction.
    const BinaryForm& c1() const noexcept { return c1_; }

private:
    BinaryForm a_;
    BinaryForm b_;
    BinaryForm c1_;
};

/// C_1, C_3, ..., C_{2R-1} with R = floor((d+1)/2); C_{2r-1} has order 2d-4r+2.
struct CombinantSequence {
    int d = 0;
    std::vector<BinaryForm> entries;

    static int length_for(int d) { return (d + 1) / 2; }
    static int order_of(int d, int r) { return 2 * d - 4 * r + 2; }

    /// C_{2r-1}, r counted from 1.
    const BinaryForm& at(int r) const;
};

/// Pencil drawn from one seeded stream; A equals random_form(d, seed, bound).
/// Dependent draws of B are rejected.
Pencil random_pencil(int d, std::uint64_t seed, int bound);

CombinantSequence combinant_sequence(const Pencil& pencil);

/// det of the 3x3 matrix of raw second partials (d11, d12, d22) of A, B, F.
/// Vanishes exactly when F lies in the pencil. Order 3(d-2).
BinaryForm wronskian(const Pencil& pencil, const BinaryForm& f);

/// (C1, F)_2 - (d-2)/(4d-6) F C3, of order 3d-6. Vanishes exactly when F lies in
/// the pencil. Requires d >= 3.
BinaryForm membership_defect(const Pencil& pencil, const BinaryForm& f);

} // namespace pencil
