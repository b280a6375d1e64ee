#include "pencil/omega.hpp"

#include "pencil/error.hpp"
#include "pencil/syzygy.hpp"

#include <algorithm>

namespace pencil {

namespace {

void accumulate(MultiForm::Terms& terms, const Exponents& e, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }
}

void require_distinct(PairId a, PairId b, const char* op)
{
    if (a == b) {
        throw PreconditionError(std::string(op) + " needs two distinct pairs, got " + pair_name(a) + " twice");
    }
}

std::size_t slot(PairId p, Axis axis)
{
    return ScalarVar{p, axis}.slot();
}

} // namespace

MultiForm bracket(PairId a, PairId b)
{
    require_distinct(a, b, "bracket");
    Profile profile{};
    profile[static_cast<std::size_t>(a)] = 1;
    profile[static_cast<std::size_t>(b)] = 1;
    Exponents plus{};
    plus[slot(a, Axis::first)] = 1;
    plus[slot(b, Axis::second)] = 1;
    Exponents minus{};
    minus[slot(b, Axis::first)] = 1;
    minus[slot(a, Axis::second)] = 1;
    return MultiForm(profile, {{plus, Rational(1)}, {minus, Rational(-1)}});
}

MultiForm omega(const MultiForm& f, PairId a, PairId b)
{
    require_distinct(a, b, "omega");
    const std::size_t a1 = slot(a, Axis::first);
    const std::size_t a2 = slot(a, Axis::second);
    const std::size_t b1 = slot(b, Axis::first);
    const std::size_t b2 = slot(b, Axis::second);

    Profile profile = f.profile();
    for (PairId p : {a, b}) {
        auto& deg = profile[static_cast<std::size_t>(p)];
        if (deg && *deg > 0) {
            --*deg;
        }
    }

    MultiForm::Terms out;
    for (const auto& [e, c] : f.terms()) {
        if (e[a1] > 0 && e[b2] > 0) {
            Exponents de = e;
            --de[a1];
            --de[b2];
            accumulate(out, de, c * Rational(static_cast<long>(e[a1]) * e[b2]));
        }
        if (e[b1] > 0 && e[a2] > 0) {
            Exponents de = e;
            --de[b1];
            --de[a2];
            accumulate(out, de, -(c * Rational(static_cast<long>(e[b1]) * e[a2])));
        }
    }
    return MultiForm(profile, std::move(out));
}

MultiForm omega_power(const MultiForm& f, PairId a, PairId b, int power)
{
    if (power < 0) {
        throw PreconditionError("negative power of omega");
    }
    MultiForm out = f;
    for (int k = 0; k < power && !out.is_zero(); ++k) {
        out = omega(out, a, b);
    }
    if (out.is_zero()) {
        // Keep the degree bookkeeping consistent when the chain dies early.
        Profile profile = f.profile();
        for (PairId p : {a, b}) {
            auto& deg = profile[static_cast<std::size_t>(p)];
            if (deg) {
                *deg = std::max(0, *deg - power);
            }
        }
        return MultiForm(profile);
    }
    return out;
}

MultiForm substitute(const MultiForm& f, PairId from1, PairId from2, PairId to)
{
    require_distinct(from1, from2, "substitute");
    if (to == from1 || to == from2) {
        throw PreconditionError(std::string("substitute: target pair ") + pair_name(to) + " is also a source");
    }
    if (!f.is_active(from1) || !f.is_active(from2)) {
        throw PreconditionError(std::string("substitute: source pairs ") + pair_name(from1) + "," + pair_name(from2) +
                                " must both be active");
    }
    Profile profile = f.profile();
    const auto i1 = static_cast<std::size_t>(from1);
    const auto i2 = static_cast<std::size_t>(from2);
    const auto it = static_cast<std::size_t>(to);
    profile[it] = profile[it].value_or(0) + *profile[i1] + *profile[i2];
    profile[i1].reset();
    profile[i2].reset();

    MultiForm::Terms out;
    for (const auto& [e, c] : f.terms()) {
        Exponents s = e;
        s[2 * it] = static_cast<std::uint16_t>(s[2 * it] + s[2 * i1] + s[2 * i2]);
        s[2 * it + 1] = static_cast<std::uint16_t>(s[2 * it + 1] + s[2 * i1 + 1] + s[2 * i2 + 1]);
        s[2 * i1] = s[2 * i1 + 1] = s[2 * i2] = s[2 * i2 + 1] = 0;
        accumulate(out, s, c);
    }
    return MultiForm(profile, std::move(out));
}

Rational h_factor(int m, int n, int q)
{
    if (q < 0 || q > std::min(m, n)) {
        throw PreconditionError("h(m,n;q) needs 0 <= q <= min(m,n)");
    }
    return Rational(factorial(m + n - 2 * q + 1), factorial(m + n - q + 1) * factorial(q));
}

Rational mu_factor(int p, int q, int l, int m)
{
    if (m < 0 || l < m) {
        throw PreconditionError("mu(p,q;l,m) needs l >= m >= 0");
    }
    // (p+q-l+2m+1)!/(p+q-l+m+1)! as the product of its m top factors
    Integer tail = 1;
    for (int k = 1; k <= m; ++k) {
        tail *= p + q - l + m + 1 + k;
    }
    return factorial_ratio(l, l - m) * Rational(tail);
}

MultiForm zeta_term(PairId a, PairId b, PairId c, PairId e, int d, int r, const LinearSymbol& f)
{
    if (d - 2 * r + 1 < 0 || r < 1) {
        throw PreconditionError("zeta_term needs 1 <= r <= (d+1)/2");
    }
    MultiForm out = bracket(a, b);
    const MultiForm ce = bracket(c, e);
    for (int k = 0; k < 2 * r - 1; ++k) {
        out = out * ce;
    }
    out = out * linear_power(f, a, d - 1);
    out = out * linear_power(f, b, d - 1);
    out = out * linear_power(f, c, d - 2 * r + 1);
    out = out * linear_power(f, e, d - 2 * r + 1);
    return out;
}

MultiForm zeta_image(int d, int r, const LinearSymbol& f)
{
    require_syzygy_range(d, r);
    using P = PairId;
    MultiForm out = zeta_term(P::x, P::y, P::z, P::w, d, r, f);
    out -= zeta_term(P::x, P::z, P::y, P::w, d, r, f);
    out += zeta_term(P::x, P::w, P::y, P::z, d, r, f);
    out -= zeta_term(P::y, P::w, P::x, P::z, d, r, f);
    out += zeta_term(P::z, P::w, P::x, P::y, d, r, f);
    out -= zeta_term(P::z, P::y, P::x, P::w, d, r, f);
    return out;
}

BinaryForm beta_chain(const MultiForm& q, int d, int r, int i, int j)
{
    require_term_range(d, r, i, j);
    for (PairId p : kAllPairs) {
        const bool quad = p == PairId::x || p == PairId::y || p == PairId::z || p == PairId::w;
        if (quad ? q.degree(p) != d : q.is_active(p)) {
            throw PreconditionError("beta_chain needs a form of degree d in each of x,y,z,w only");
        }
    }

    MultiForm stage = omega_power(q, PairId::x, PairId::y, 2 * i - 1);
    stage = omega_power(stage, PairId::z, PairId::w, 2 * j - 1);
    stage = substitute(stage, PairId::x, PairId::y, PairId::u);
    stage = substitute(stage, PairId::z, PairId::w, PairId::v);
    stage *= h_factor(d, d, 2 * i - 1) * h_factor(d, d, 2 * j - 1);

    const int order_u = 2 * d - 4 * i + 2;
    const int order_v = 2 * d - 4 * j + 2;
    const int last = 2 * (r - i - j + 1);
    stage = omega_power(stage, PairId::u, PairId::v, last);
    stage = substitute(stage, PairId::u, PairId::v, PairId::t);
    stage *= h_factor(order_u, order_v, last);
    return stage.to_binary(PairId::t);
}

std::optional<Rational> proportionality(const BinaryForm& g, const BinaryForm& base)
{
    if (g.order() != base.order() || base.is_zero()) {
        return std::nullopt;
    }
    int k = 0;
    while (base.coeff(k).is_zero()) {
        ++k;
    }
    const Rational ratio = g.coeff(k) / base.coeff(k);
    if (g != base * ratio) {
        return std::nullopt;
    }
    return ratio;
}

OmegaChainResult run_omega_chain(const MultiForm& q, int d, int r, int i, int j, const LinearSymbol& f)
{
    OmegaChainResult result{d, r, i, j, f, beta_chain(q, d, r, i, j), Rational()};
    const BinaryForm base = linear_power(f.first, f.second, 4 * (d - r));
    const auto ratio = proportionality(result.output, base);
    if (!ratio) {
        throw FormulaViolation("omega chain output is not a multiple of f_t^" + std::to_string(4 * (d - r)));
    }
    result.ratio = *ratio;
    return result;
}

Rational verify_theta(int d, int r, int i, int j, const LinearSymbol& f)
{
    require_term_range(d, r, i, j);
    return run_omega_chain(zeta_image(d, r, f), d, r, i, j, f).ratio;
}

CConstants c_constants(int d, int r, int i, int j)
{
    require_term_range(d, r, i, j);
    auto fr = [](int a, int b) { return factorial_ratio(a, b); };
    auto f = [](int n) { return Rational(factorial(n)); };
    CConstants c;
    c.c_i = Rational((2 * i - 1) * (d - 2 * r + 1)) * fr(d - 1, d - 2 * i + 1) * fr(2 * r - 1, 2 * r - 2 * i + 1);
    c.c_i_d = f(2 * r - 2 * i + 1) * f(d) / (f(2 * r - 2 * i - 2 * j + 2) * f(d - 2 * j + 1));
    c.c_ii = Rational(2 * i - 1) * f(d - 1) * f(2 * r - 1) / (f(d - 2 * i + 1) * f(2 * r - 2 * i));
    c.c_ii_d = f(2 * r - 2 * i) * f(d - 1) / (f(2 * r - 2 * i - 2 * j + 2) * f(d - 2 * j + 1));
    c.c_iii = Rational(d - 2 * i + 1) * f(d - 1) * f(2 * r - 1) / (f(d - 2 * i + 1) * f(2 * r - 2 * i));
    c.c_iii_d = Rational((2 * j - 1) * (d - 2 * r + 2 * i)) * f(2 * r - 2 * i) * f(d - 1) /
                (f(2 * r - 2 * i - 2 * j + 2) * f(d - 2 * j + 1));
    c.c_iii_dd = Rational((d - 2 * j + 1) * (2 * r - 2 * i - 2 * j + 2)) * f(2 * r - 2 * i) * f(d - 1) /
                 (f(2 * r - 2 * i - 2 * j + 2) * f(d - 2 * j + 1));
    return c;
}

Rational c_aggregate(int d, int r, int i, int j)
{
    const CConstants c = c_constants(d, r, i, j);
    const Rational inner = -(c.c_i * c.c_i_d) - Rational((2 * d - 2 * j + 2) * (2 * j - 1)) * c.c_ii * c.c_ii_d -
                           c.c_iii * c.c_iii_d + c.c_iii * c.c_iii_dd;
    return h_factor(d, d, 2 * i - 1) * h_factor(d, d, 2 * j - 1) * inner;
}

} // namespace pencil
