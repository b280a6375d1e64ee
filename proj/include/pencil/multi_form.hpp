#pragma once

#include "pencil/binary_form.hpp"
#include "pencil/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace pencil {

/// The symbolic binary variable pairs. Each pair p stands for (p1, p2).
enum class PairId : std::uint8_t { x, y, z, w, u, v, t };

inline constexpr std::size_t kPairCount = 7;
inline constexpr std::size_t kScalarCount = 2 * kPairCount;
inline constexpr std::array<PairId, kPairCount> kAllPairs{PairId::x, PairId::y, PairId::z, PairId::w,
                                                          PairId::u, PairId::v, PairId::t};

char pair_name(PairId p);
std::optional<PairId> pair_from_name(char c);

/// One scalar variable: component 0 is p1, component 1 is p2.
struct ScalarVar {
    PairId pair;
    Axis axis;

    std::size_t slot() const { return 2 * static_cast<std::size_t>(pair) + (axis == Axis::first ? 0 : 1); }
};

/// Exponents over the fixed order x1,x2,y1,y2,z1,z2,w1,w2,u1,u2,v1,v2,t1,t2.
using Exponents = std::array<std::uint16_t, kScalarCount>;

/// A linear form f1*p1 + f2*p2 that can be attached to any pair.
struct LinearSymbol {
    Rational first;
    Rational second;

    LinearSymbol(Rational f1, Rational f2);
};

/// Degree per pair; inactive pairs carry no degree.
using Profile = std::array<std::optional<int>, kPairCount>;

/// Sparse polynomial in several binary pairs, homogeneous of a declared degree
/// in each active pair. Zero coefficients are never stored.
class MultiForm {
public:
    using Terms = std::map<Exponents, Rational>;

    /// The constant 1.
    MultiForm();
    /// Zero form with the given profile.
    explicit MultiForm(Profile profile);
    /// Validates that every term matches the profile.
    MultiForm(Profile profile, Terms terms);

    static MultiForm constant(Rational c);
    static MultiForm from_binary(const BinaryForm& f, PairId pair);

    const Profile& profile() const noexcept { return profile_; }
    std::optional<int> degree(PairId p) const { return profile_[static_cast<std::size_t>(p)]; }
    bool is_active(PairId p) const { return degree(p).has_value(); }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Exponents& e) const;

    /// Every stored monomial has the declared degree in every active pair and
    /// nothing in the inactive ones.
    bool is_homogeneous() const;

    /// Restrict to a form in one pair; all other pairs must be inactive.
    BinaryForm to_binary(PairId pair) const;

    MultiForm& operator+=(const MultiForm& other);
    MultiForm& operator-=(const MultiForm& other);
    MultiForm& operator*=(const Rational& scalar);

    friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
    friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
    friend MultiForm operator*(MultiForm a, const Rational& s) { return a *= s; }
    friend MultiForm operator*(const Rational& s, MultiForm a) { return a *= s; }
    friend MultiForm operator*(const MultiForm& a, const MultiForm& b);
    MultiForm operator-() const { return *this * Rational(-1); }

    friend bool operator==(const MultiForm&, const MultiForm&) = default;

private:
    friend MultiForm form_diff(const MultiForm& f, ScalarVar var);
    friend MultiForm swap_pairs(const MultiForm& f, PairId a, PairId b);

    void add_term(const Exponents& e, const Rational& c);

    Profile profile_{};
    Terms terms_;
};

/// a*F + b*G; the profiles must be identical.
MultiForm form_add(const MultiForm& f, const MultiForm& g, const Rational& a = 1, const Rational& b = 1);
MultiForm form_mul(const MultiForm& f, const MultiForm& g);

/// Formal partial derivative. The degree of the pair drops by one (never
/// below zero; differentiating a pair of degree 0 yields the zero form).
MultiForm form_diff(const MultiForm& f, ScalarVar var);

/// (f1 p1 + f2 p2)^n as a form in the single pair p.
MultiForm linear_power(const LinearSymbol& f, PairId p, int n);

/// Exchange the variables of two pairs (a1<->b1, a2<->b2).
MultiForm swap_pairs(const MultiForm& f, PairId a, PairId b);

std::string to_string(const MultiForm& f);

} // namespace pencil
