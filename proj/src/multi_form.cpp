#include "pencil/multi_form.hpp"

#include "pencil/error.hpp"

#include <sstream>

namespace pencil {

namespace {

constexpr std::array<char, kPairCount> kNames{'x', 'y', 'z', 'w', 'u', 'v', 't'};

std::string describe(const Profile& p)
{
    std::string out = "{";
    for (std::size_t k = 0; k < kPairCount; ++k) {
        if (p[k]) {
            if (out.size() > 1) {
                out += ",";
            }
            out += kNames[k];
            out += ":" + std::to_string(*p[k]);
        }
    }
    return out + "}";
}

void require_same_profile(const MultiForm& a, const MultiForm& b, const char* op)
{
    if (a.profile() != b.profile()) {
        throw DegreeMismatch(std::string(op) + " on profiles " + describe(a.profile()) + " and " +
                             describe(b.profile()));
    }
}

} // namespace

char pair_name(PairId p)
{
    return kNames[static_cast<std::size_t>(p)];
}

std::optional<PairId> pair_from_name(char c)
{
    for (std::size_t k = 0; k < kPairCount; ++k) {
        if (kNames[k] == c) {
            return kAllPairs[k];
        }
    }
    return std::nullopt;
}

LinearSymbol::LinearSymbol(Rational f1, Rational f2) : first(std::move(f1)), second(std::move(f2))
{
    if (first.is_zero() && second.is_zero()) {
        throw PreconditionError("linear symbol with both components zero");
    }
}

MultiForm::MultiForm()
{
    terms_.emplace(Exponents{}, Rational(1));
}

MultiForm::MultiForm(Profile profile) : profile_(profile) {}

MultiForm::MultiForm(Profile profile, Terms terms) : profile_(profile)
{
    for (auto& [e, c] : terms) {
        add_term(e, c);
    }
    if (!is_homogeneous()) {
        throw DegreeMismatch("terms do not match profile " + describe(profile_));
    }
}

MultiForm MultiForm::constant(Rational c)
{
    MultiForm f{Profile{}};
    f.add_term(Exponents{}, c);
    return f;
}

MultiForm MultiForm::from_binary(const BinaryForm& f, PairId pair)
{
    Profile profile{};
    profile[static_cast<std::size_t>(pair)] = f.order();
    MultiForm out(profile);
    const ScalarVar v1{pair, Axis::first};
    const ScalarVar v2{pair, Axis::second};
    for (int k = 0; k <= f.order(); ++k) {
        Exponents e{};
        e[v1.slot()] = static_cast<std::uint16_t>(f.order() - k);
        e[v2.slot()] = static_cast<std::uint16_t>(k);
        out.add_term(e, f.coeff(k));
    }
    return out;
}

Rational MultiForm::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

bool MultiForm::is_homogeneous() const
{
    for (const auto& [e, c] : terms_) {
        if (c.is_zero()) {
            return false;
        }
        for (std::size_t k = 0; k < kPairCount; ++k) {
            const int deg = e[2 * k] + e[2 * k + 1];
            if (profile_[k] ? deg != *profile_[k] : deg != 0) {
                return false;
            }
        }
    }
    return true;
}

BinaryForm MultiForm::to_binary(PairId pair) const
{
    for (PairId p : kAllPairs) {
        if (p != pair && is_active(p)) {
            throw PreconditionError(std::string("to_binary: pair ") + pair_name(p) + " is still active");
        }
    }
    const int d = degree(pair).value_or(0);
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
    const std::size_t slot2 = ScalarVar{pair, Axis::second}.slot();
    for (const auto& [e, c] : terms_) {
        coeffs[e[slot2]] = c;
    }
    return BinaryForm(std::move(coeffs));
}

void MultiForm::add_term(const Exponents& e, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiForm& MultiForm::operator+=(const MultiForm& other)
{
    // the zero form is homogeneous of every degree
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        profile_ = other.profile_;
    }
    require_same_profile(*this, other, "addition");
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiForm& MultiForm::operator-=(const MultiForm& other)
{
    // the zero form is homogeneous of every degree
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        profile_ = other.profile_;
    }
    require_same_profile(*this, other, "subtraction");
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiForm& MultiForm::operator*=(const Rational& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

MultiForm operator*(const MultiForm& a, const MultiForm& b)
{
    Profile profile{};
    for (std::size_t k = 0; k < kPairCount; ++k) {
        if (a.profile_[k] || b.profile_[k]) {
            profile[k] = a.profile_[k].value_or(0) + b.profile_[k].value_or(0);
        }
    }
    MultiForm out(profile);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t s = 0; s < kScalarCount; ++s) {
                e[s] = static_cast<std::uint16_t>(ea[s] + eb[s]);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiForm form_add(const MultiForm& f, const MultiForm& g, const Rational& a, const Rational& b)
{
    require_same_profile(f, g, "form_add");
    return f * a + g * b;
}

MultiForm form_mul(const MultiForm& f, const MultiForm& g)
{
    return f * g;
}

MultiForm form_diff(const MultiForm& f, ScalarVar var)
{
    Profile profile = f.profile_;
    auto& deg = profile[static_cast<std::size_t>(var.pair)];
    if (deg && *deg > 0) {
        --*deg;
    }
    MultiForm out(profile);
    const std::size_t slot = var.slot();
    for (const auto& [e, c] : f.terms_) {
        if (e[slot] == 0) {
            continue;
        }
        Exponents de = e;
        --de[slot];
        out.add_term(de, c * Rational(static_cast<long>(e[slot])));
    }
    return out;
}

MultiForm linear_power(const LinearSymbol& f, PairId p, int n)
{
    return MultiForm::from_binary(linear_power(f.first, f.second, n), p);
}

MultiForm swap_pairs(const MultiForm& f, PairId a, PairId b)
{
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    Profile profile = f.profile_;
    std::swap(profile[ia], profile[ib]);
    MultiForm out(profile);
    for (const auto& [e, c] : f.terms_) {
        Exponents s = e;
        std::swap(s[2 * ia], s[2 * ib]);
        std::swap(s[2 * ia + 1], s[2 * ib + 1]);
        out.add_term(s, c);
    }
    return out;
}

std::string to_string(const MultiForm& f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        }
        else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t s = 0; s < kScalarCount; ++s) {
            if (e[s] == 0) {
                continue;
            }
            vars << (any_var ? "*" : "") << kNames[s / 2] << (s % 2 + 1);
            if (e[s] > 1) {
                vars << "^" << e[s];
            }
            any_var = true;
        }
        if (!any_var) {
            os << mag;
        }
        else if (mag == Rational(1)) {
            os << vars.str();
        }
        else {
            os << mag << "*" << vars.str();
        }
    }
    return os.str();
}

} // namespace pencil
