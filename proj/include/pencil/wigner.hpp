#pragma once

#include "pencil/surd.hpp"

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace pencil {

/// Integer or half-integer, stored as twice its value.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }

    bool is_integer() const noexcept { return twice % 2 == 0; }
    HalfInt operator-() const { return HalfInt{-twice}; }

    /// "7/2", "-1/2", "3".
    std::string str() const;
    /// Accepts an integer or an odd numerator over 2.
    static HalfInt parse(std::string_view text);

    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

/// Racah closed form. Throws PreconditionError on negative j, |m| > j, or j+m
/// not integral; returns 0 when the m's do not sum to zero or (j1 j2 j3) is not a triad.
SurdSum wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// {j1 j2 j3; j4 j5 j6} by the Racah single sum. Throws PreconditionError when
/// a j is negative or one of the four triads has a half-integral perimeter;
/// returns 0 when a triad violates the triangle inequality.
SurdSum wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

struct NineJArray {
    std::array<std::array<HalfInt, 3>, 3> rows{};

    static NineJArray from_twice(const std::array<int, 9>& twice);

    const HalfInt& at(int row, int col) const { return rows.at(row).at(col); }

    NineJArray transposed() const;
    /// 0-based indices.
    NineJArray with_rows_swapped(int a, int b) const;
    NineJArray with_columns_swapped(int a, int b) const;

    /// Twice the sum of all nine entries.
    int twice_entry_sum() const;

    /// "{a b c; d e f; g h i}".
    std::string str() const;

    friend bool operator==(const NineJArray&, const NineJArray&) = default;
};

/// Sum over x of (-1)^(2x) (2x+1) {j1 j4 j7; j8 j9 x}{j2 j5 j8; j4 x j6}{j3 j6 j9; x j1 j2}.
/// Throws PreconditionError on negative entries or a row/column triad with
/// half-integral perimeter; 0 when a row or column violates the triangle inequality.
SurdSum wigner9j(const NineJArray& arr);

struct CombinantArrays {
    NineJArray b;
    NineJArray b_prime;
};

/// B has rows (d/2, d/2, d-2i+1), (d/2, d/2, d-2j+1), (d-1, d-2r+1, 2d-2r);
/// B' is B after swapping rows 1,2, then rows 1,3, then columns 2,3.
CombinantArrays combinant_9j_array(int d, int r, int i, int j);

/// Exact equality of the two 9-j values.
bool equivalence_check(const NineJArray& b, const NineJArray& b_prime);

} // namespace pencil
