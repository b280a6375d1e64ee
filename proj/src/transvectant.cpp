#include "pencil/transvectant.hpp"

#include "pencil/error.hpp"

#include <algorithm>
#include <vector>

namespace pencil {

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int q)
{
    const int m = f.order();
    const int n = g.order();
    if (q < 0 || q > std::min(m, n)) {
        throw PreconditionError("transvectant index " + std::to_string(q) + " outside 0.." +
                                std::to_string(std::min(m, n)));
    }

    // Column of q-th partials of F by x2-count, built incrementally.
    std::vector<BinaryForm> df;
    df.reserve(static_cast<std::size_t>(q) + 1);
    df.push_back(form_diff(f, q, 0));
    for (int i = 1; i <= q; ++i) {
        df.push_back(form_diff(form_diff(f, q - i, 0), 0, i));
    }
    std::vector<BinaryForm> dg;
    dg.reserve(static_cast<std::size_t>(q) + 1);
    for (int i = 0; i <= q; ++i) {
        dg.push_back(form_diff(form_diff(g, i, 0), 0, q - i));
    }

    BinaryForm sum(m + n - 2 * q);
    for (int i = 0; i <= q; ++i) {
        Rational c(binomial(q, i));
        if (i % 2 == 1) {
            c = -c;
        }
        sum += c * (df[static_cast<std::size_t>(i)] * dg[static_cast<std::size_t>(i)]);
    }
    const Rational prefactor = Rational(factorial(m - q) * factorial(n - q), factorial(m) * factorial(n));
    return sum * prefactor;
}

} // namespace pencil
