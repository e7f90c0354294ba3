#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lcnf/formula.hpp"
#include "lcnf/numeric.hpp"

namespace lcnf {

/// A family of k-element subsets of {1..n}, kept sorted and duplicate-free.
class KSetSystem
{
    std::size_t ground_size_ = 0;
    std::size_t k_ = 0;
    std::vector<std::vector<std::uint32_t>> sets_;

public:
    KSetSystem() = default;
    /// Throws std::invalid_argument if a set has the wrong size, repeats an
    /// element, or leaves the range 1..n.
    KSetSystem(std::size_t ground_size, std::size_t k, std::vector<std::vector<std::uint32_t>> sets);

    [[nodiscard]] std::size_t ground_size() const { return ground_size_; }
    [[nodiscard]] std::size_t k() const { return k_; }
    [[nodiscard]] std::size_t size() const { return sets_.size(); }
    [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& sets() const { return sets_; }

    /// The first `count` sets in canonical order.
    [[nodiscard]] KSetSystem truncated(std::size_t count) const;

    friend bool operator==(const KSetSystem&, const KSetSystem&) = default;
};

struct SetSystemLimits
{
    std::uint64_t max_points = 4096;      // q^d for lines()
    std::uint64_t max_subsets = 10000000; // C(n,k) for greedy_pack()
};

/// n(n-1) / (k(k-1)): the pair-counting upper bound on L(n,k).
[[nodiscard]] rational l_upper(std::uint64_t n, std::uint64_t k);
/// 2n(n-1) / (k^2 (k-1)^2): the greedy lower bound on L(n,k).
[[nodiscard]] rational l_lower(std::uint64_t n, std::uint64_t k);
/// C(n,k) / (C(k,2) C(n-2,k-2)), the independent-set bound a maximal greedy
/// packing always meets. Equals l_lower(n,k).
[[nodiscard]] rational greedy_guarantee(std::uint64_t n, std::uint64_t k);

[[nodiscard]] big_int binomial(std::uint64_t n, std::uint64_t k);

/// All lines of the affine space GF(q)^d, as a q-set system over q^d points.
/// Point (c_1..c_d) maps to ground element 1 + sum c_i q^(i-1).
[[nodiscard]] KSetSystem lines(std::uint32_t q, std::uint32_t d, const SetSystemLimits& limits = {});

/// Lexicographic first-fit packing of k-subsets of {1..n}: a subset is taken
/// iff none of its pairs is already covered. The result is maximal.
[[nodiscard]] KSetSystem greedy_pack(std::uint32_t n, std::uint32_t k, const SetSystemLimits& limits = {});

/// Pairwise intersections are at most 1; with `steiner`, every pair of
/// ground elements is additionally covered exactly once.
[[nodiscard]] bool check_system(const KSetSystem& s, bool steiner);

/// "h <n> <k> <count>" followed by one set per line.
void write_hypergraph(std::ostream& os, const KSetSystem& s);
/// Throws std::runtime_error with a line number on malformed input.
[[nodiscard]] KSetSystem read_hypergraph(std::istream& is);

} // namespace lcnf
