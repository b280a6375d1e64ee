#include "pencil/form_io.hpp"

#include "pencil/error.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace pencil {

namespace {

class FormParser {
public:
    explicit FormParser(std::string_view text) : text_(text) {}

    BinaryForm run()
    {
        skip_space();
        if (at_end()) {
            throw ParseError("empty form expression", pos_);
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
            }
            term(sign, pos_);
            first = false;
            skip_space();
        }

        BinaryForm out(*order_);
        for (const auto& [x2, c] : coeffs_) {
            out += BinaryForm::monomial(*order_, x2, c);
        }
        return out;
    }

private:
    void term(int sign, std::size_t start)
    {
        Rational coeff = sign;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            coeff *= number();
            any = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (peek() != 'x') {
                    throw ParseError("expected x1 or x2 after '*'", pos_);
                }
            }
        }
        int p1 = 0;
        int p2 = 0;
        while (peek() == 'x') {
            const std::size_t var_pos = pos_;
            ++pos_;
            const char which = peek();
            if (which != '1' && which != '2') {
                throw ParseError("unknown variable, expected x1 or x2", var_pos);
            }
            ++pos_;
            int power = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                if (std::isdigit(static_cast<unsigned char>(peek())) == 0) {
                    throw ParseError("expected exponent after '^'", pos_);
                }
                power = small_integer();
            }
            (which == '1' ? p1 : p2) += power;
            any = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (peek() != 'x') {
                    throw ParseError("expected x1 or x2 after '*'", pos_);
                }
            }
        }
        if (!any) {
            if (at_end()) {
                throw ParseError("expression ends after a sign", pos_);
            }
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }

        const int order = p1 + p2;
        if (order_ && *order_ != order) {
            std::string_view shown = text_.substr(start, pos_ - start);
            while (!shown.empty() && std::isspace(static_cast<unsigned char>(shown.back())) != 0) {
                shown.remove_suffix(1);
            }
            throw ParseError("inhomogeneous form: term '" + std::string(shown) + "' has degree " +
                                 std::to_string(order) + ", expected " + std::to_string(*order_),
                             start);
        }
        order_ = order;
        coeffs_[p2] += coeff;
    }

    Rational number()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
        skip_space();
        if (peek() == '/') {
            ++pos_;
            skip_space();
            if (std::isdigit(static_cast<unsigned char>(peek())) == 0) {
                throw ParseError("expected denominator after '/'", pos_);
            }
            while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                ++pos_;
            }
        }
        std::string literal;
        for (char c : text_.substr(start, pos_ - start)) {
            if (std::isspace(static_cast<unsigned char>(c)) == 0) {
                literal += c;
            }
        }
        try {
            return Rational::parse(literal);
        } catch (const Error& e) {
            throw ParseError(std::string("bad coefficient '") + literal + "'", start);
        }
    }

    int small_integer()
    {
        const std::size_t start = pos_;
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            v = v * 10 + (peek() - '0');
            if (v > 100000) {
                throw ParseError("exponent too large", start);
            }
            ++pos_;
        }
        return static_cast<int>(v);
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<int> order_;
    std::map<int, Rational> coeffs_;
};

std::string monomial_text(int p1, int p2)
{
    std::string out;
    auto factor = [&](const char* name, int p) {
        if (p == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += name;
        if (p > 1) {
            out += '^' + std::to_string(p);
        }
    };
    factor("x1", p1);
    factor("x2", p2);
    return out;
}

Rational rational_from_json(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_string()) {
        throw ParseError(where + " must be a fraction string", 0);
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position());
    }
}

int int_from_json(const nlohmann::json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw ParseError(std::string("missing integer field '") + key + "'", 0);
    }
    return j.at(key).get<int>();
}

} // namespace

BinaryForm parse_form(std::string_view text)
{
    return FormParser(text).run();
}

std::string format_form(const BinaryForm& f)
{
    const int d = f.order();
    if (f.is_zero()) {
        return d == 0 ? "0" : "0*" + monomial_text(d, 0);
    }
    std::string out;
    for (int k = 0; k <= d; ++k) {
        const Rational& c = f.coeff(k);
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? -c : c;
        const std::string mono = monomial_text(d - k, k);
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

nlohmann::ordered_json form_to_json(const BinaryForm& f)
{
    nlohmann::ordered_json j;
    j["order"] = f.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (const Rational& c : f.coeffs()) {
        coeffs.push_back(c.str());
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

BinaryForm form_from_json(const nlohmann::json& j)
{
    const int order = int_from_json(j, "order");
    if (order < 0) {
        throw ParseError("negative form order", 0);
    }
    if (!j.contains("coeffs") || !j.at("coeffs").is_array()) {
        throw ParseError("missing array field 'coeffs'", 0);
    }
    const auto& arr = j.at("coeffs");
    if (arr.size() != static_cast<std::size_t>(order) + 1) {
        throw ParseError("order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                             " coefficients, got " + std::to_string(arr.size()),
                         0);
    }
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        coeffs.push_back(rational_from_json(arr[k], "coeffs[" + std::to_string(k) + "]"));
    }
    return BinaryForm(std::move(coeffs));
}

nlohmann::ordered_json table_to_json(const SyzygyTable& table)
{
    nlohmann::ordered_json j;
    j["d"] = table.d;
    j["r"] = table.r;
    nlohmann::ordered_json alphas = nlohmann::ordered_json::object();
    for (const TermIndex& ij : syzygy_index_set(table.r)) {
        alphas[std::to_string(ij.i) + "," + std::to_string(ij.j)] = table.alpha(ij.i, ij.j).str();
    }
    j["alphas"] = std::move(alphas);
    return j;
}

SyzygyTable table_from_json(const nlohmann::json& j)
{
    SyzygyTable table;
    table.d = int_from_json(j, "d");
    table.r = int_from_json(j, "r");
    if (!j.contains("alphas") || !j.at("alphas").is_object()) {
        throw ParseError("missing object field 'alphas'", 0);
    }
    const auto& alphas = j.at("alphas");
    for (const TermIndex& ij : syzygy_index_set(table.r)) {
        const std::string key = std::to_string(ij.i) + "," + std::to_string(ij.j);
        if (!alphas.contains(key)) {
            throw ParseError("alphas is missing entry '" + key + "'", 0);
        }
        table.alphas.emplace(ij, rational_from_json(alphas.at(key), "alphas[" + key + "]"));
    }
    if (alphas.size() != table.alphas.size()) {
        throw ParseError("alphas has entries outside the index set for r=" + std::to_string(table.r), 0);
    }
    return table;
}

} // namespace pencil
