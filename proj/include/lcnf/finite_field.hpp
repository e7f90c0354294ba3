#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lcnf {

/// q = p^m, if q is a prime power.
struct PrimePower
{
    std::uint32_t prime;
    std::uint32_t exponent;
};

[[nodiscard]] std::optional<PrimePower> prime_power(std::uint64_t q);

/// GF(p^m) with elements encoded as 0..q-1 (base-p digits are polynomial
/// coefficients, constant term first). Arithmetic runs off precomputed tables,
/// so construction is limited to small orders.
class FiniteField
{
public:
    using element = std::uint32_t;

    static constexpr std::uint32_t max_order = 1024;

    /// Throws std::invalid_argument if q is not a prime power or exceeds max_order.
    explicit FiniteField(std::uint32_t q);

    [[nodiscard]] std::uint32_t order() const { return q_; }
    [[nodiscard]] std::uint32_t characteristic() const { return p_; }
    [[nodiscard]] std::uint32_t degree() const { return m_; }
    /// Coefficients c_0..c_m of the monic reduction polynomial.
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    [[nodiscard]] element add(element a, element b) const { return add_[a * q_ + b]; }
    [[nodiscard]] element mul(element a, element b) const { return mul_[a * q_ + b]; }
    [[nodiscard]] element neg(element a) const { return neg_[a]; }
    [[nodiscard]] element sub(element a, element b) const { return add(a, neg(b)); }
    /// Throws std::domain_error for zero.
    [[nodiscard]] element inv(element a) const;

private:
    std::uint32_t q_;
    std::uint32_t p_;
    std::uint32_t m_;
    std::vector<std::uint32_t> modulus_;
    std::vector<element> add_;
    std::vector<element> mul_;
    std::vector<element> neg_;
    std::vector<element> inv_;
};

} // namespace lcnf
