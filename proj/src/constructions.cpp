#include "lcnf/constructions.hpp"

#include "lcnf/finite_field.hpp"
#include "lcnf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace lcnf {

VariablePool::VariablePool(std::uint32_t first) : next_{first}
{
    if (first == 0)
        throw std::invalid_argument("variable ids start at 1");
}

Variable VariablePool::fresh()
{
    if (next_ == UINT32_MAX)
        throw limit_error("variable ids exhausted");
    return Variable{next_++};
}

std::vector<Variable> VariablePool::fresh(std::size_t count)
{
    std::vector<Variable> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(fresh());
    return out;
}

Formula otimes(const Formula& f, const Clause& d)
{
    if (d.size() != f.size())
        throw std::invalid_argument("otimes needs one literal per clause: |F| = " + std::to_string(f.size()) +
                                    ", |D| = " + std::to_string(d.size()));
    const auto fv = variables(f);
    for (auto lit : d)
        if (std::binary_search(fv.begin(), fv.end(), lit.var()))
            throw std::invalid_argument("otimes needs D variable-disjoint from F");
    std::vector<Clause> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto lits = f[i].literals();
        lits.push_back(d[i]);
        out.emplace_back(std::move(lits));
    }
    return Formula{std::move(out)};
}

TowerSize tower_size(std::size_t k)
{
    TowerSize out;
    out.k = k;
    big_int t = 1;
    std::size_t i = 0;
    for (; i < k; ++i) {
        if (t > (1u << 20))
            break; // t * 2^t would not fit in memory
        t <<= static_cast<unsigned>(t);
    }
    if (i == k) {
        out.exact = t;
        out.text = t.str();
    } else {
        out.text = "t(" + std::to_string(k - 1) + ")*2^t(" + std::to_string(k - 1) + ")";
    }
    return out;
}

namespace {

Formula tower_in(std::size_t k)
{
    if (k == 0)
        return Formula{Clause{}};
    const Formula base = tower_in(k - 1);
    const auto m = base.size();
    const auto base_vars = variables(base);

    VariablePool pool{1};
    const auto pattern = pool.fresh(m);
    std::vector<Clause> out;
    out.reserve(m << m);
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << m); ++signs) {
        std::map<Variable, Variable> renaming;
        for (auto v : base_vars)
            renaming.emplace(v, pool.fresh()); // monotone, so canonical order survives
        std::vector<Literal> d;
        for (std::size_t i = 0; i < m; ++i)
            d.emplace_back(pattern[i], ((signs >> i) & 1) != 0);
        const auto part = otimes(rename(base, renaming), Clause{std::move(d)});
        out.insert(out.end(), part.begin(), part.end());
    }
    return Formula{std::move(out)};
}

} // namespace

Formula tower(std::size_t k, const TowerOptions& options)
{
    if (k > options.max_k)
        throw limit_error("tower(" + std::to_string(k) + ") has t(" + std::to_string(k) +
                          ") = " + tower_size(k).text + " clauses; the ceiling is k = " +
                          std::to_string(options.max_k));
    return tower_in(k);
}

std::uint64_t signing_word(std::uint64_t seed, std::uint64_t counter)
{
    auto splitmix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return splitmix(seed ^ splitmix(counter));
}

Formula random_signing(const KSetSystem& s, SigningSeed seed)
{
    if (!check_system(s, false))
        throw std::invalid_argument("random signing needs a linear set system");
    const std::uint64_t words = (s.k() + 63) / 64;
    std::vector<Clause> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& set = s.sets()[i];
        std::vector<Literal> lits;
        lits.reserve(set.size());
        for (std::size_t j = 0; j < set.size(); ++j) {
            const auto word = signing_word(seed.value, i * words + j / 64);
            lits.emplace_back(Variable{set[j]}, ((word >> (j % 64)) & 1) != 0);
        }
        out.emplace_back(std::move(lits));
    }
    return Formula{std::move(out)};
}

std::string_view to_string(SystemProvider p)
{
    switch (p) {
    case SystemProvider::lines:
        return "lines";
    case SystemProvider::greedy:
        return "greedy";
    case SystemProvider::pairs:
        return "pairs";
    }
    return "unknown";
}

SystemProvider parse_provider(std::string_view name)
{
    if (name == "lines")
        return SystemProvider::lines;
    if (name == "greedy")
        return SystemProvider::greedy;
    if (name == "pairs")
        return SystemProvider::pairs;
    throw std::invalid_argument("unknown provider '" + std::string{name} + "' (lines|greedy|pairs)");
}

big_int provider_capacity(SystemProvider provider, std::uint64_t n, std::uint64_t k)
{
    if (n < k || k < 2)
        return 0;
    switch (provider) {
    case SystemProvider::pairs:
        return k == 2 ? binomial(n, 2) : big_int{0};
    case SystemProvider::greedy:
        return ceil(greedy_guarantee(n, k));
    case SystemProvider::lines: {
        if (!prime_power(k))
            return 0;
        std::uint64_t power = k;
        while (power < n)
            power *= k;
        if (power != n)
            return 0;
        return big_int{n} * (n - 1) / (big_int{k} * (k - 1));
    }
    }
    return 0;
}

namespace {

std::uint64_t ceil_ld(long double x)
{
    return static_cast<std::uint64_t>(std::ceil(x));
}

constexpr std::uint64_t sizing_search_limit = 1ULL << 40;

} // namespace

SizingResult sizing_unsat(std::size_t k, SystemProvider provider)
{
    if (k < 1)
        throw std::invalid_argument("sizing needs k >= 1");
    if (k == 1)
        throw std::invalid_argument("no linear 1-set system over n elements has ceil(2 n ln 2) > n sets");
    if (k > 60)
        throw std::invalid_argument("sizing supports k <= 60");
    if (provider == SystemProvider::pairs && k != 2)
        throw std::invalid_argument("the pairs provider only supplies 2-sets");
    if (provider == SystemProvider::lines && !prime_power(k))
        throw std::invalid_argument("the lines provider needs a prime-power k, got " + std::to_string(k));

    const long double per_var = std::ldexp(std::numbers::ln2_v<long double>, static_cast<int>(k));
    auto required = [&](std::uint64_t n) { return ceil_ld(per_var * static_cast<long double>(n)); };

    auto feasible = [&](std::uint64_t n) { return provider_capacity(provider, n, k) >= required(n); };
    auto result = [&](std::uint64_t n) { return SizingResult{k, n, required(n), std::nullopt}; };

    if (provider == SystemProvider::lines) {
        for (std::uint64_t n = k; n < sizing_search_limit; n *= k)
            if (feasible(n))
                return result(n);
        throw std::invalid_argument("no feasible size found below n = 2^40");
    }

    // Capacity grows quadratically and the requirement linearly: bracket the
    // threshold by doubling, bisect, then rescan just below it for stragglers
    // caused by rounding.
    std::uint64_t hi = k;
    while (!feasible(hi)) {
        if (hi >= sizing_search_limit)
            throw std::invalid_argument("no feasible size found below n = 2^40");
        hi *= 2;
    }
    std::uint64_t lo = std::max<std::uint64_t>(k, hi / 2);
    if (feasible(lo))
        hi = lo;
    while (hi - lo > 1) {
        const auto mid = lo + (hi - lo) / 2;
        (feasible(mid) ? hi : lo) = mid;
    }
    std::uint64_t best = hi;
    for (std::uint64_t n = hi; n > k && hi - n < 4096;) {
        --n;
        if (feasible(n))
            best = n;
    }
    return result(best);
}

SizingResult sizing_partial(std::size_t k, const rational& delta)
{
    if (k < 1 || k > 60)
        throw std::invalid_argument("sizing needs 1 <= k <= 60");
    if (delta <= 0 || delta > 1)
        throw std::invalid_argument("delta must lie in (0, 1], got " + to_string(delta));
    const auto d = static_cast<long double>(delta);
    const long double ln2 = std::numbers::ln2_v<long double>;
    const long double k4 = std::pow(static_cast<long double>(k), 4.0L);
    const long double threshold = k4 * std::ldexp(ln2, static_cast<int>(k)) / (d * d);
    const auto n = static_cast<std::uint64_t>(std::floor(threshold)) + 1;
    const auto m = ceil_ld(std::ldexp(ln2, static_cast<int>(k) + 1) * static_cast<long double>(n) / (d * d)) + 1;
    return {k, n, m, delta};
}

Formula f6_core()
{
    const Variable x1{1}, x2{2}, x3{3}, x4{4};
    using L = Literal;
    return {
        {L::negative(x1), L::positive(x2)}, {L::negative(x2), L::positive(x3)},
        {L::negative(x3), L::positive(x4)}, {L::negative(x4), L::positive(x1)},
        {L::positive(x1), L::positive(x3)}, {L::negative(x2), L::negative(x4)},
    };
}

Formula forcer3(const Clause& c, VariablePool& pool)
{
    if (c.size() != 2 && c.size() != 3)
        throw std::invalid_argument("forcer3 handles clauses of size 2 or 3, got " + std::to_string(c.size()));
    if (pool.peek() <= c.literals().back().var().id())
        throw std::invalid_argument("forcer internals must be numbered above the forced clause");
    using L = Literal;
    if (c.size() == 3) {
        const auto u = c[0], v = c[1], w = c[2];
        const auto x = pool.fresh(4);
        return {
            {L::negative(x[0]), L::positive(x[1]), u}, {L::negative(x[1]), L::positive(x[2]), v},
            {L::negative(x[2]), L::positive(x[3]), u}, {L::negative(x[3]), L::positive(x[0]), v},
            {L::positive(x[0]), L::positive(x[2]), w}, {L::negative(x[1]), L::negative(x[3]), w},
        };
    }
    const auto u = c[0], v = c[1];
    const auto x = pool.fresh(6);
    return {
        {L::negative(x[0]), L::positive(x[1]), u},
        {L::negative(x[1]), L::positive(x[2]), v},
        {L::negative(x[2]), L::positive(x[3]), u},
        {L::negative(x[3]), L::positive(x[4]), v},
        {L::negative(x[4]), L::positive(x[5]), u},
        {L::negative(x[5]), L::positive(x[0]), v},
        {L::positive(x[0]), L::positive(x[2]), L::positive(x[4])},
        {L::negative(x[1]), L::negative(x[3]), L::negative(x[5])},
    };
}

Formula forcer3(const Clause& c)
{
    if (c.empty())
        throw std::invalid_argument("forcer3 handles clauses of size 2 or 3, got 0");
    VariablePool pool{c.literals().back().var().id() + 1};
    return forcer3(c, pool);
}

Formula family3(int variant)
{
    using L = Literal;
    const Variable u{1}, v{2}, w{3};
    std::vector<Clause> parts;
    auto add = [&parts](const Formula& g) { parts.insert(parts.end(), g.begin(), g.end()); };

    switch (variant) {
    case 48: {
        VariablePool pool{4};
        for (unsigned signs = 0; signs < 8; ++signs)
            add(forcer3({L{u, (signs & 1) != 0}, L{v, (signs & 2) != 0}, L{w, (signs & 4) != 0}}, pool));
        break;
    }
    case 32: {
        VariablePool pool{3};
        for (unsigned signs = 0; signs < 4; ++signs)
            add(forcer3({L{u, (signs & 1) != 0}, L{v, (signs & 2) != 0}}, pool));
        break;
    }
    case 31: {
        VariablePool pool{4};
        add(forcer3({L::positive(u), L::positive(v)}, pool));
        add(forcer3({L::positive(u), L::negative(v)}, pool));
        add(forcer3({L::negative(u), L::positive(v)}, pool));
        add(forcer3({L::negative(u), L::negative(v), L::positive(w)}, pool));
        parts.push_back({L::negative(u), L::negative(v), L::negative(w)});
        break;
    }
    case 30: {
        const Variable x{4}, y{5};
        const Clause c1{L::positive(u), L::positive(v), L::positive(w)};
        const Clause c2{L::negative(u), L::positive(v), L::positive(w)};
        const Clause c3{L::negative(v), L::positive(w)};
        const Clause d1{L::negative(w), L::positive(x), L::positive(y)};
        const Clause d2{L::negative(w), L::positive(x), L::negative(y)};
        const Clause d3{L::negative(w), L::negative(x)};
        VariablePool pool{6};
        add(forcer3(c2, pool));
        add(forcer3(d2, pool));
        add(forcer3(c3, pool));
        add(forcer3(d3, pool));
        parts.push_back(c1);
        parts.push_back(d1);
        break;
    }
    default:
        throw std::invalid_argument("family3 variants are 48, 32, 31 and 30; got " + std::to_string(variant));
    }
    return Formula{std::move(parts)};
}

bool is_minimally_unsatisfiable(const Formula& g)
{
    if (solve(g).satisfiable())
        return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<Clause> rest;
        rest.reserve(g.size() - 1);
        for (std::size_t j = 0; j < g.size(); ++j)
            if (j != i)
                rest.push_back(g[j]);
        if (!solve(Formula{std::move(rest)}).satisfiable())
            return false;
    }
    return true;
}

Formula forcer_from_mu(const Formula& g, Variable y, const MuCheckOptions& options)
{
    const auto vars = variables(g);
    if (!std::binary_search(vars.begin(), vars.end(), y))
        throw std::invalid_argument("x" + std::to_string(y.id()) + " does not occur in the formula");
    if (!is_linear(g))
        throw std::invalid_argument("forcer source formula must be linear");
    if (options.verify && g.size() <= options.max_clauses && !is_minimally_unsatisfiable(g))
        throw std::invalid_argument("forcer source formula is not minimally unsatisfiable");

    std::vector<Clause> kept;
    for (const auto& c : g)
        if (!c.contains(Literal::positive(y)))
            kept.push_back(c);
    return Formula{std::move(kept)};
}

} // namespace lcnf
