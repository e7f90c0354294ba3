#include "lcnf/finite_field.hpp"

#include <string>

namespace lcnf {

namespace {

using poly = std::vector<std::uint32_t>; // coefficients, constant term first

void trim(poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    for (std::uint32_t b = 1; b < p; ++b)
        if (a * b % p == 1)
            return b;
    throw std::domain_error("no inverse");
}

/// Remainder of a divided by monic-or-not b over GF(p).
poly poly_mod(poly a, const poly& b, std::uint32_t p)
{
    trim(a);
    const auto lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const auto shift = a.size() - b.size();
        const auto factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
        trim(a);
    }
    return a;
}

poly decode(std::uint32_t value, std::uint32_t p, std::uint32_t len)
{
    poly out(len);
    for (auto& c : out) {
        c = value % p;
        value /= p;
    }
    return out;
}

std::uint32_t encode(const poly& a, std::uint32_t p)
{
    std::uint32_t value = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        value = value * p + *it;
    return value;
}

bool is_irreducible(const poly& f, std::uint32_t p)
{
    const auto m = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= m / 2; ++d) {
        std::uint32_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint32_t low = 0; low < count; ++low) {
            auto g = decode(low, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

/// First monic irreducible of degree m, ordering by (c_{m-1}, ..., c_0).
poly first_irreducible(std::uint32_t p, std::uint32_t m, std::uint32_t q)
{
    for (std::uint32_t low = 0; low < q; ++low) {
        auto f = decode(low, p, m);
        f.push_back(1);
        if (is_irreducible(f, p))
            return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace

std::optional<PrimePower> prime_power(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0)
        ++p;
    if (q % p != 0)
        p = q; // q is prime
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1)
        return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), m};
}

FiniteField::FiniteField(std::uint32_t q) : q_{q}
{
    const auto pp = prime_power(q);
    if (!pp)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (q > max_order)
        throw std::invalid_argument("field order " + std::to_string(q) + " exceeds " + std::to_string(max_order));
    p_ = pp->prime;
    m_ = pp->exponent;
    modulus_ = first_irreducible(p_, m_, q_);

    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (element a = 0; a < q_; ++a) {
        const auto pa = decode(a, p_, m_);
        poly na(m_);
        for (std::uint32_t i = 0; i < m_; ++i)
            na[i] = (p_ - pa[i]) % p_;
        neg_[a] = encode(na, p_);
        for (element b = 0; b < q_; ++b) {
            const auto pb = decode(b, p_, m_);
            poly sum(m_);
            for (std::uint32_t i = 0; i < m_; ++i)
                sum[i] = (pa[i] + pb[i]) % p_;
            add_[a * q_ + b] = encode(sum, p_);

            poly prod(2 * m_, 0);
            for (std::uint32_t i = 0; i < m_; ++i)
                for (std::uint32_t j = 0; j < m_; ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            auto reduced = poly_mod(prod, modulus_, p_);
            reduced.resize(m_, 0);
            const auto c = encode(reduced, p_);
            mul_[a * q_ + b] = c;
            if (c == 1)
                inv_[a] = b;
        }
    }
}

FiniteField::element FiniteField::inv(element a) const
{
    if (a == 0)
        throw std::domain_error("zero has no multiplicative inverse");
    return inv_[a];
}

} // namespace lcnf
