#include "lcnf/reduction.hpp"

#include "lcnf/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcnf {

Formula neg_forcer3(Variable y, VariablePool& pool)
{
    using L = Literal;
    const auto x = pool.fresh();
    const auto z = pool.fresh();
    const Clause d1{L::negative(y), L::positive(x), L::positive(z)};
    const Clause d2{L::negative(y), L::positive(x), L::negative(z)};
    const Clause d3{L::negative(y), L::negative(x)};
    return forcer3(d2, pool).with(forcer3(d3, pool)).with(d1);
}

Formula neg_forcer3(Variable y)
{
    VariablePool pool{y.id() + 1};
    return neg_forcer3(y, pool);
}

std::string_view to_string(ForcerSource s)
{
    switch (s) {
    case ForcerSource::builtin3:
        return "builtin-3";
    case ForcerSource::user_file:
        return "user-file";
    case ForcerSource::mu_extracted:
        return "mu-extracted";
    }
    return "unknown";
}

ForcerProvider::ForcerProvider(std::size_t k, ForcerSource source, Formula pattern, Variable forced)
    : k_{k}, source_{source}, pattern_{std::move(pattern)}, forced_{forced}
{
}

ForcerProvider ForcerProvider::builtin3()
{
    const Variable y{1};
    return {3, ForcerSource::builtin3, neg_forcer3(y), y};
}

namespace {

void validate_forcer(const Formula& forcer, Variable forced, std::size_t k)
{
    const auto vars = variables(forcer);
    if (!std::binary_search(vars.begin(), vars.end(), forced))
        throw std::invalid_argument("forced variable x" + std::to_string(forced.id()) + " does not occur in the forcer");
    if (!is_uniform(forcer, k))
        throw std::invalid_argument("forcer is not a " + std::to_string(k) + "-CNF");
    if (!is_linear(forcer))
        throw std::invalid_argument("forcer is not linear");
}

} // namespace

ForcerProvider ForcerProvider::from_forcer(const Formula& forcer, Variable forced, std::size_t k, bool verify)
{
    validate_forcer(forcer, forced, k);
    if (verify && !forcer_check(forcer, Clause{Literal::negative(forced)}))
        throw std::invalid_argument("formula does not force x" + std::to_string(forced.id()) + " to 0");
    return {k, ForcerSource::user_file, forcer, forced};
}

ForcerProvider ForcerProvider::from_unsatisfiable(const Formula& g, std::size_t k)
{
    if (!is_uniform(g, k) || !is_linear(g))
        throw std::invalid_argument("forcer source must be a linear " + std::to_string(k) + "-CNF");
    const auto core = minimize_unsat(g);
    std::optional<Variable> forced;
    for (const auto& c : core)
        for (auto lit : c)
            if (lit.is_positive() && (!forced || lit.var() < *forced))
                forced = lit.var();
    if (!forced)
        throw std::invalid_argument("unsatisfiable core has no positive literal to turn into a forcer");
    MuCheckOptions options;
    options.verify = false; // minimize_unsat already guarantees minimality
    auto forcer = forcer_from_mu(core, *forced, options);
    validate_forcer(forcer, *forced, k);
    return {k, ForcerSource::mu_extracted, std::move(forcer), *forced};
}

Formula ForcerProvider::instantiate(Variable y, VariablePool& pool) const
{
    std::map<Variable, Variable> renaming;
    renaming.emplace(forced_, y);
    for (auto v : variables(pattern_))
        if (v != forced_)
            renaming.emplace(v, pool.fresh());
    return rename(pattern_, renaming);
}

PartialAssignment ReductionTrace::lift(const PartialAssignment& reduced_model) const
{
    PartialAssignment out;
    for (const auto& [original, copies] : copy_map)
        if (auto value = reduced_model.get(copies.front()))
            out.set(original, *value);
    return out;
}

bool ReductionTrace::copies_agree(const PartialAssignment& reduced_model) const
{
    for (const auto& [original, copies] : copy_map) {
        const auto first = reduced_model.get(copies.front());
        for (auto c : copies)
            if (reduced_model.get(c) != first)
                return false;
    }
    return true;
}

Reduction reduce_to_linear(const Formula& f, std::size_t k, const ForcerProvider& provider)
{
    if (k < 3)
        throw std::invalid_argument("the linear reduction needs k >= 3");
    if (!is_uniform(f, k))
        throw std::invalid_argument("input is not a " + std::to_string(k) + "-CNF");
    if (provider.k() != k)
        throw std::invalid_argument("forcer provider supplies " + std::to_string(provider.k()) + "-CNFs, need " +
                                    std::to_string(k));

    Reduction out;
    auto& trace = out.trace;
    trace.k = k;
    trace.forcer_source = provider.source();
    trace.forcer_size = provider.size();

    std::map<Variable, std::size_t> occurrences;
    for (const auto& c : f)
        for (auto lit : c)
            ++occurrences[lit.var()];

    VariablePool pool{f.max_variable_id() + 1};
    for (auto [x, count] : occurrences) {
        auto& copies = trace.copy_map[x];
        copies.push_back(x);
        const std::size_t total = count == 1 ? 1 : std::max<std::size_t>(count, 3);
        for (std::size_t i = 1; i < total; ++i)
            copies.push_back(pool.fresh());
    }

    std::vector<Clause> clauses;
    std::map<Variable, std::size_t> next_copy;
    for (const auto& c : f) {
        std::vector<Literal> lits;
        for (auto lit : c)
            lits.emplace_back(trace.copy_map[lit.var()][next_copy[lit.var()]++], lit.is_negative());
        clauses.emplace_back(std::move(lits));
    }

    // Padding variables and forcers are numbered after every copy, each forcer
    // right after its padding variable, so every forcer occupies a contiguous
    // block of the canonical clause order.
    std::vector<Variable> forced;
    for (const auto& [x, copies] : trace.copy_map) {
        if (copies.size() == 1)
            continue;
        for (std::size_t i = 0; i < copies.size(); ++i) {
            std::vector<Literal> lits{Literal::negative(copies[i]), Literal::positive(copies[(i + 1) % copies.size()])};
            auto& pads = trace.padding_vars.emplace_back();
            for (std::size_t p = 0; p + 2 < k; ++p) {
                const auto y = pool.fresh();
                pads.push_back(y);
                forced.push_back(y);
                lits.push_back(Literal::positive(y));
                const auto gadget = provider.instantiate(y, pool);
                clauses.insert(clauses.end(), gadget.begin(), gadget.end());
            }
            clauses.emplace_back(std::move(lits));
        }
    }
    out.formula = Formula{std::move(clauses)};

    if (!forced.empty()) {
        const auto first_pad = forced.front().id();
        trace.forcer_spans.reserve(forced.size());
        for (auto y : forced)
            trace.forcer_spans.push_back({y, 0, 0});
        std::size_t owner_prev = SIZE_MAX;
        for (std::size_t i = 0; i < out.formula.size(); ++i) {
            const auto& c = out.formula[i];
            if (c.empty() || c[0].var().id() < first_pad)
                continue;
            const auto owner = static_cast<std::size_t>(
                std::upper_bound(forced.begin(), forced.end(), c[0].var()) - forced.begin() - 1);
            auto& span = trace.forcer_spans[owner];
            if (owner != owner_prev) {
                if (span.end != 0)
                    throw std::logic_error("forcer clauses are not contiguous");
                span.begin = i;
            }
            span.end = i + 1;
            owner_prev = owner;
        }
        for (const auto& span : trace.forcer_spans)
            if (span.end - span.begin != provider.size())
                throw std::logic_error("forcer span has the wrong size");
    }

    if (!is_linear(out.formula))
        throw std::logic_error("reduction produced a non-linear formula");
    if (!is_uniform(out.formula, k))
        throw std::logic_error("reduction produced clauses of the wrong width");
    return out;
}

Formula minimize_unsat(const Formula& f)
{
    if (solve(f).satisfiable())
        throw std::invalid_argument("cannot extract an unsatisfiable core from a satisfiable formula");
    std::vector<Clause> kept = f.clauses();
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<Clause> trial;
        trial.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i)
                trial.push_back(kept[j]);
        Formula candidate{trial};
        if (!solve(candidate).satisfiable())
            kept = std::move(trial);
        else
            ++i;
    }
    return Formula{std::move(kept)};
}

} // namespace lcnf
