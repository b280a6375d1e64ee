#pragma once

#include "pencil/binary_form.hpp"

namespace pencil {

/// The q-th transvectant (F,G)_q of forms of orders m and n:
///
///   (m-q)!(n-q)!/(m!n!) * sum_i (-1)^i C(q,i) d^qF/dx1^(q-i)dx2^i * d^qG/dx1^i dx2^(q-i)
///
/// The result always has order m+n-2q, even when it vanishes. Throws
/// PreconditionError unless 0 <= q <= min(m, n).
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int q);

} // namespace pencil
