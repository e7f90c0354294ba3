#include "lcnf/set_systems.hpp"

#include "lcnf/finite_field.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace lcnf {

KSetSystem::KSetSystem(std::size_t ground_size, std::size_t k, std::vector<std::vector<std::uint32_t>> sets)
    : ground_size_{ground_size}, k_{k}, sets_{std::move(sets)}
{
    for (auto& s : sets_) {
        if (s.size() != k_)
            throw std::invalid_argument("set of size " + std::to_string(s.size()) + " in a " + std::to_string(k_) +
                                        "-set system");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("set repeats an element");
        if (!s.empty() && (s.front() < 1 || s.back() > ground_size_))
            throw std::invalid_argument("set element outside 1.." + std::to_string(ground_size_));
    }
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

KSetSystem KSetSystem::truncated(std::size_t count) const
{
    if (count > sets_.size())
        throw std::invalid_argument("cannot take " + std::to_string(count) + " sets from a system of " +
                                    std::to_string(sets_.size()));
    return {ground_size_, k_, {sets_.begin(), sets_.begin() + static_cast<std::ptrdiff_t>(count)}};
}

namespace {

void require_nk(std::uint64_t n, std::uint64_t k)
{
    if (k < 2)
        throw std::invalid_argument("set-system bounds need k >= 2");
    if (n < k)
        throw std::invalid_argument("set-system bounds need n >= k");
}

} // namespace

rational l_upper(std::uint64_t n, std::uint64_t k)
{
    require_nk(n, k);
    return rational{big_int{n} * (n - 1), big_int{k} * (k - 1)};
}

rational l_lower(std::uint64_t n, std::uint64_t k)
{
    require_nk(n, k);
    const big_int kk = big_int{k} * (k - 1);
    return rational{2 * big_int{n} * (n - 1), kk * kk};
}

big_int binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    big_int out = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

rational greedy_guarantee(std::uint64_t n, std::uint64_t k)
{
    require_nk(n, k);
    return rational{binomial(n, k), binomial(k, 2) * binomial(n - 2, k - 2)};
}

KSetSystem lines(std::uint32_t q, std::uint32_t d, const SetSystemLimits& limits)
{
    if (!prime_power(q))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (d < 1)
        throw std::invalid_argument("dimension must be at least 1");
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        n *= q;
        if (n > limits.max_points)
            throw limit_error("GF(" + std::to_string(q) + ")^" + std::to_string(d) + " exceeds the point ceiling of " +
                              std::to_string(limits.max_points));
    }
    const FiniteField field{q};

    auto digits = [&](std::uint64_t point) {
        std::vector<FiniteField::element> out(d);
        for (auto& c : out) {
            c = static_cast<FiniteField::element>(point % q);
            point /= q;
        }
        return out;
    };
    auto index = [&](const std::vector<FiniteField::element>& coords) {
        std::uint64_t out = 0;
        for (auto it = coords.rbegin(); it != coords.rend(); ++it)
            out = out * q + *it;
        return out;
    };

    std::vector<bool> covered(n * n, false);
    std::vector<std::vector<std::uint32_t>> sets;
    for (std::uint64_t a = 0; a < n; ++a) {
        const auto base = digits(a);
        for (std::uint64_t b = a + 1; b < n; ++b) {
            if (covered[a * n + b])
                continue;
            const auto other = digits(b);
            std::vector<FiniteField::element> dir(d);
            for (std::uint32_t i = 0; i < d; ++i)
                dir[i] = field.sub(other[i], base[i]);

            std::vector<std::uint32_t> line;
            line.reserve(q);
            std::vector<FiniteField::element> point(d);
            for (FiniteField::element lambda = 0; lambda < q; ++lambda) {
                for (std::uint32_t i = 0; i < d; ++i)
                    point[i] = field.add(base[i], field.mul(lambda, dir[i]));
                line.push_back(static_cast<std::uint32_t>(index(point)));
            }
            for (auto u : line)
                for (auto v : line)
                    if (u != v)
                        covered[std::uint64_t{u} * n + v] = true;
            for (auto& u : line)
                ++u;
            sets.push_back(std::move(line));
        }
    }
    return {static_cast<std::size_t>(n), q, std::move(sets)};
}

KSetSystem greedy_pack(std::uint32_t n, std::uint32_t k, const SetSystemLimits& limits)
{
    require_nk(n, k);
    const auto total = binomial(n, k);
    if (total > limits.max_subsets)
        throw limit_error("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + total.str() +
                          " k-subsets exceed the enumeration ceiling of " + std::to_string(limits.max_subsets) +
                          "; use lines() for prime-power k");

    std::vector<bool> used(std::size_t{n + 1} * (n + 1), false);
    std::vector<std::vector<std::uint32_t>> sets;
    std::vector<std::uint32_t> subset(k);
    for (std::uint32_t i = 0; i < k; ++i)
        subset[i] = i + 1;

    while (true) {
        bool free = true;
        for (std::uint32_t i = 0; i < k && free; ++i)
            for (std::uint32_t j = i + 1; j < k && free; ++j)
                free = !used[std::size_t{subset[i]} * (n + 1) + subset[j]];
        if (free) {
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = i + 1; j < k; ++j)
                    used[std::size_t{subset[i]} * (n + 1) + subset[j]] = true;
            sets.push_back(subset);
        }

        // next k-subset in lexicographic order
        std::int64_t pos = static_cast<std::int64_t>(k) - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - k + static_cast<std::uint32_t>(pos) + 1)
            --pos;
        if (pos < 0)
            break;
        ++subset[static_cast<std::size_t>(pos)];
        for (auto i = static_cast<std::size_t>(pos) + 1; i < k; ++i)
            subset[i] = subset[i - 1] + 1;
    }
    return {n, k, std::move(sets)};
}

bool check_system(const KSetSystem& s, bool steiner)
{
    const std::size_t n = s.ground_size();
    std::vector<std::uint32_t> cover((n + 1) * (n + 1), 0);
    for (const auto& set : s.sets())
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (++cover[set[i] * (n + 1) + set[j]] > 1)
                    return false;
    if (!steiner)
        return true;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (cover[u * (n + 1) + v] != 1)
                return false;
    return true;
}

void write_hypergraph(std::ostream& os, const KSetSystem& s)
{
    os << "h " << s.ground_size() << ' ' << s.k() << ' ' << s.size() << '\n';
    for (const auto& set : s.sets()) {
        for (std::size_t i = 0; i < set.size(); ++i)
            os << (i ? " " : "") << set[i];
        os << '\n';
    }
}

KSetSystem read_hypergraph(std::istream& is)
{
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("hypergraph line " + std::to_string(line_no) + ": " + what);
    };

    std::size_t n = 0, k = 0, count = 0;
    bool have_header = false;
    std::vector<std::vector<std::uint32_t>> sets;
    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first) || first[0] == 'c')
            continue;
        if (!have_header) {
            if (first != "h" || !(ss >> n >> k >> count))
                fail("expected header 'h <n> <k> <count>'");
            have_header = true;
            continue;
        }
        std::vector<std::uint32_t> set;
        std::istringstream all(line);
        long long value = 0;
        while (all >> value) {
            if (value < 1 || static_cast<std::size_t>(value) > n)
                fail("element " + std::to_string(value) + " outside 1.." + std::to_string(n));
            set.push_back(static_cast<std::uint32_t>(value));
        }
        if (!all.eof())
            fail("non-integer token");
        if (set.size() != k)
            fail("expected " + std::to_string(k) + " elements, got " + std::to_string(set.size()));
        sets.push_back(std::move(set));
    }
    if (!have_header)
        fail("missing header");
    if (sets.size() != count)
        fail("header declares " + std::to_string(count) + " sets, found " + std::to_string(sets.size()));
    try {
        return {n, k, std::move(sets)};
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return {};
}

} // namespace lcnf
