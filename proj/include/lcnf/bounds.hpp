#pragma once

#include "lcnf/numeric.hpp"

#include <cstddef>
#include <optional>

namespace lcnf {

/// Bounds on f(k), the fewest clauses of an unsatisfiable linear k-CNF.
struct FkBounds
{
    std::size_t k = 0;
    big_int lower;
    /// The j that realises `lower` when the peeling bound beats 2^k.
    std::optional<std::size_t> lower_peel_j;
    big_int upper;
};

/// Peeling lower bound for a given j:
/// (k-j-1)/(2(k-j)) * (j 2^(k-2) - k^2 j 2^j). Requires 1 <= j <= k-2.
[[nodiscard]] rational peel_lower_term(std::size_t k, std::size_t j);

/// lower = max(2^k, max_j ceil(peel_lower_term(k, j))) over 1 <= j <= k-2;
/// upper = k^4 4^k. Exact integer arithmetic throughout.
[[nodiscard]] FkBounds f_bounds(std::size_t k);

/// Clauses one peeling round is guaranteed to satisfy in an [l,k]-CNF of
/// degree d: (l-1)/(2l) * (2^(k-2) - k d 2^(k-l)). May be negative.
/// `round` is the round index and does not enter the value. Requires 2 <= l <= k.
[[nodiscard]] rational peel_guarantee(std::size_t k, std::size_t round, std::size_t d, std::size_t l);

} // namespace lcnf
