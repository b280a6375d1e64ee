#pragma once

#include "pencil/binary_form.hpp"
#include "pencil/syzygy.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace pencil {

/// Parses a flat sum of signed monomials, e.g. "x1^3 - 2*x1*x2^2" or
/// "1/2*x1^2*x2^2 + x1^4". Coefficients are integers or p/q, '*' is optional,
/// factors may repeat and whitespace between tokens is ignored. Every term must
/// have the same total degree. Throws ParseError.
BinaryForm parse_form(std::string_view text);

/// Inverse of parse_form. The zero form of order d prints as "0*x1^d".
std::string format_form(const BinaryForm& f);

/// {"order": d, "coeffs": ["p/q", ...]} with coeffs ascending in the x2 power.
nlohmann::ordered_json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const nlohmann::json& j);

/// {"d": 7, "r": 3, "alphas": {"1,1": "10", ...}} in index-set order.
nlohmann::ordered_json table_to_json(const SyzygyTable& table);
SyzygyTable table_from_json(const nlohmann::json& j);

} // namespace pencil
