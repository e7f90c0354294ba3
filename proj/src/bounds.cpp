#include "lcnf/bounds.hpp"

#include <stdexcept>
#include <string>

namespace lcnf {

rational peel_lower_term(std::size_t k, std::size_t j)
{
    if (j < 1 || j + 2 > k)
        throw std::invalid_argument("peeling term needs 1 <= j <= k-2");
    const rational factor{static_cast<long long>(k - j - 1), static_cast<long long>(2 * (k - j))};
    const big_int kk = big_int{k} * k;
    const big_int inner = big_int{j} * (big_int{1} << (k - 2)) - kk * j * (big_int{1} << j);
    return factor * inner;
}

FkBounds f_bounds(std::size_t k)
{
    if (k < 1)
        throw std::invalid_argument("f(k) bounds need k >= 1");
    FkBounds out;
    out.k = k;
    out.lower = big_int{1} << k;
    for (std::size_t j = 1; j + 2 <= k; ++j) {
        const auto term = ceil(peel_lower_term(k, j));
        if (term > out.lower) {
            out.lower = term;
            out.lower_peel_j = j;
        }
    }
    const big_int k4 = big_int{k} * k * k * k;
    out.upper = k4 << (2 * k);
    return out;
}

rational peel_guarantee(std::size_t k, std::size_t /*round*/, std::size_t d, std::size_t l)
{
    if (l < 2 || l > k)
        throw std::invalid_argument("peeling guarantee needs 2 <= l <= k, got l = " + std::to_string(l));
    const rational factor{static_cast<long long>(l - 1), static_cast<long long>(2 * l)};
    const big_int inner = (big_int{1} << (k - 2)) - big_int{k} * d * (big_int{1} << (k - l));
    return factor * inner;
}

} // namespace lcnf
