#include "lcnf/formula.hpp"

#include <algorithm>
#include <unordered_set>
#include <sstream>

namespace lcnf {

Variable::Variable(std::uint32_t id) : id_{id}
{
    if (id == 0)
        throw formula_error("variable ids start at 1");
}

Literal Literal::from_dimacs(std::int64_t value)
{
    if (value == 0)
        throw formula_error("literal 0 is the clause terminator, not a literal");
    const auto magnitude = value < 0 ? -value : value;
    if (magnitude > static_cast<std::int64_t>(UINT32_MAX))
        throw formula_error("literal out of range: " + std::to_string(value));
    return {Variable{static_cast<std::uint32_t>(magnitude)}, value < 0};
}

std::int64_t Literal::to_dimacs() const
{
    const auto v = static_cast<std::int64_t>(var_.id());
    return negative_ ? -v : v;
}

Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}

Clause::Clause(std::vector<Literal> lits) : lits_{std::move(lits)}
{
    std::sort(lits_.begin(), lits_.end());
    for (std::size_t i = 1; i < lits_.size(); ++i) {
        if (lits_[i].var() != lits_[i - 1].var())
            continue;
        if (lits_[i] == lits_[i - 1])
            throw formula_error("duplicate literal " + to_string(lits_[i]) + " in clause");
        throw formula_error("tautological clause mentions both polarities of x" +
                            std::to_string(lits_[i].var().id()));
    }
}

Clause Clause::from_dimacs(std::initializer_list<std::int64_t> lits)
{
    std::vector<Literal> out;
    out.reserve(lits.size());
    for (auto v : lits)
        out.push_back(Literal::from_dimacs(v));
    return Clause{std::move(out)};
}

bool Clause::contains(Literal lit) const
{
    return std::binary_search(lits_.begin(), lits_.end(), lit);
}

bool Clause::mentions(Variable v) const
{
    return literal_of(v).has_value();
}

std::optional<Literal> Clause::literal_of(Variable v) const
{
    auto it = std::lower_bound(lits_.begin(), lits_.end(), Literal::negative(v));
    if (it != lits_.end() && it->var() == v)
        return *it;
    return std::nullopt;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b)
{
    return std::lexicographical_compare_three_way(a.lits_.begin(), a.lits_.end(), b.lits_.begin(), b.lits_.end());
}

Formula::Formula(std::initializer_list<Clause> clauses) : Formula(std::vector<Clause>(clauses)) {}

Formula::Formula(std::vector<Clause> clauses) : clauses_{std::move(clauses)}
{
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool Formula::contains(const Clause& c) const
{
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

std::optional<std::size_t> Formula::index_of(const Clause& c) const
{
    auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
    if (it == clauses_.end() || *it != c)
        return std::nullopt;
    return static_cast<std::size_t>(it - clauses_.begin());
}

std::uint32_t Formula::max_variable_id() const
{
    std::uint32_t best = 0;
    for (const auto& c : clauses_)
        if (!c.empty())
            best = std::max(best, c.literals().back().var().id());
    return best;
}

bool Formula::has_empty_clause() const
{
    return !clauses_.empty() && clauses_.front().empty();
}

Formula Formula::with(const Formula& other) const
{
    std::vector<Clause> all = clauses_;
    all.insert(all.end(), other.clauses_.begin(), other.clauses_.end());
    return Formula{std::move(all)};
}

Formula Formula::with(const Clause& c) const
{
    std::vector<Clause> all = clauses_;
    all.push_back(c);
    return Formula{std::move(all)};
}

std::optional<bool> PartialAssignment::get(Variable v) const
{
    if (auto it = values_.find(v); it != values_.end())
        return it->second;
    return std::nullopt;
}

std::optional<bool> PartialAssignment::evaluate(Literal lit) const
{
    if (auto value = get(lit.var()))
        return lit.evaluate(*value);
    return std::nullopt;
}

bool PartialAssignment::satisfies(const Clause& c) const
{
    return std::any_of(c.begin(), c.end(), [&](Literal l) { return evaluate(l) == true; });
}

bool PartialAssignment::satisfies(const Formula& f) const
{
    return std::all_of(f.begin(), f.end(), [&](const Clause& c) { return satisfies(c); });
}

std::size_t PartialAssignment::count_satisfied(const Formula& f) const
{
    return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](const Clause& c) { return satisfies(c); }));
}

PartialAssignment PartialAssignment::merged(const PartialAssignment& other) const
{
    PartialAssignment out = *this;
    for (auto [v, value] : other.values_) {
        auto [it, inserted] = out.values_.emplace(v, value);
        if (!inserted && it->second != value)
            throw formula_error("assignments disagree on x" + std::to_string(v.id()));
    }
    return out;
}

VariableSet variables(const Clause& c)
{
    VariableSet out;
    out.reserve(c.size());
    for (auto lit : c)
        out.push_back(lit.var());
    return out; // literal order is variable order
}

VariableSet variables(const Formula& f)
{
    VariableSet out;
    for (const auto& c : f)
        for (auto lit : c)
            out.push_back(lit.var());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_linear(const Formula& f)
{
    // Two clauses share >= 2 variables iff they share a variable pair.
    std::unordered_set<std::uint64_t> pairs;
    for (const auto& c : f) {
        const auto vars = variables(c);
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j) {
                const auto key = (std::uint64_t{vars[i].id()} << 32) | vars[j].id();
                if (!pairs.insert(key).second)
                    return false;
            }
    }
    return true;
}

Skeleton skeleton(const Formula& f)
{
    Skeleton s;
    s.sets.reserve(f.size());
    for (const auto& c : f)
        s.sets.push_back(variables(c));
    std::sort(s.sets.begin(), s.sets.end());
    s.sets.erase(std::unique(s.sets.begin(), s.sets.end()), s.sets.end());
    return s;
}

Formula apply(const Formula& f, const PartialAssignment& a)
{
    if (a.empty())
        return f;
    std::vector<Clause> out;
    out.reserve(f.size());
    for (const auto& c : f) {
        if (a.satisfies(c))
            continue;
        std::vector<Literal> rest;
        for (auto lit : c)
            if (!a.defines(lit.var()))
                rest.push_back(lit);
        out.emplace_back(std::move(rest));
    }
    return Formula{std::move(out)};
}

bool is_lk(const Formula& f, std::size_t l, std::size_t k)
{
    if (l > k)
        throw formula_error("[l,k]-CNF requires l <= k");
    return std::all_of(f.begin(), f.end(), [&](const Clause& c) { return c.size() >= l && c.size() <= k; });
}

bool is_uniform(const Formula& f, std::size_t k)
{
    return is_lk(f, k, k);
}

std::size_t min_clause_size(const Formula& f)
{
    std::size_t best = SIZE_MAX;
    for (const auto& c : f)
        best = std::min(best, c.size());
    return f.empty() ? 0 : best;
}

std::size_t max_clause_size(const Formula& f)
{
    std::size_t best = 0;
    for (const auto& c : f)
        best = std::max(best, c.size());
    return best;
}

DegreeProfile degrees(const Formula& f, std::size_t k)
{
    if (k < 1)
        throw formula_error("degrees require k >= 1");
    DegreeProfile out;
    for (const auto& c : f)
        for (auto lit : c) {
            auto& d = out.per_variable[lit.var()];
            if (c.size() <= k - 1)
                ++d;
            out.max = std::max(out.max, d);
        }
    return out;
}

namespace {

void require_member(const Formula& f, const Clause& c)
{
    if (!f.contains(c))
        throw formula_error("clause " + to_string(c) + " is not part of the formula");
}

template<typename Pred>
std::vector<Clause> neighbors_where(const Formula& f, const Clause& c, Pred&& keep)
{
    require_member(f, c);
    std::vector<Clause> out;
    for (const auto& d : f) {
        if (d == c)
            continue;
        const bool shares = std::any_of(d.begin(), d.end(), [&](Literal l) { return c.mentions(l.var()); });
        if (shares && keep(d))
            out.push_back(d);
    }
    return out;
}

} // namespace

std::vector<Clause> neighborhood(const Formula& f, const Clause& c)
{
    return neighbors_where(f, c, [](const Clause&) { return true; });
}

std::vector<Clause> neighborhood_at(const Formula& f, const Clause& c, Variable x)
{
    return neighbors_where(f, c, [&](const Clause& d) { return d.mentions(x); });
}

std::vector<Clause> short_neighborhood(const Formula& f, const Clause& c, std::size_t k)
{
    return neighbors_where(f, c, [&](const Clause& d) { return d.size() + 1 <= k; });
}

std::vector<Clause> short_neighborhood_at(const Formula& f, const Clause& c, std::size_t k, Variable x)
{
    return neighbors_where(f, c, [&](const Clause& d) { return d.size() + 1 <= k && d.mentions(x); });
}

Formula rename(const Formula& f, const std::map<Variable, Variable>& mapping)
{
    std::vector<Clause> out;
    out.reserve(f.size());
    for (const auto& c : f) {
        std::vector<Literal> lits;
        lits.reserve(c.size());
        for (auto lit : c) {
            auto it = mapping.find(lit.var());
            lits.emplace_back(it == mapping.end() ? lit.var() : it->second, lit.is_negative());
        }
        out.emplace_back(std::move(lits));
    }
    return Formula{std::move(out)};
}

std::string to_string(Literal lit)
{
    return std::to_string(lit.to_dimacs());
}

std::string to_string(const Clause& c)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? " " : "") << c[i].to_dimacs();
    os << '}';
    return os.str();
}

std::string to_string(const Formula& f)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i)
        os << (i ? ", " : "") << to_string(f[i]);
    os << '}';
    return os.str();
}

} // namespace lcnf
