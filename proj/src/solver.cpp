#include "lcnf/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lcnf {

std::string_view to_string(Verdict v)
{
    return v == Verdict::sat ? "SAT" : "UNSAT";
}

namespace {

/// Counter-based DPLL over a dense copy of the formula. Literal code 2v+neg.
class Dpll
{
public:
    explicit Dpll(const Formula& f) : vars_{variables(f)}
    {
        const auto n = vars_.size();
        occurs_.resize(2 * n);
        value_.assign(n, -1);
        for (const auto& c : f) {
            std::vector<std::uint32_t> lits;
            for (auto lit : c)
                lits.push_back(code(lit));
            const auto idx = static_cast<std::uint32_t>(clauses_.size());
            for (auto l : lits)
                occurs_[l].push_back(idx);
            clauses_.push_back(std::move(lits));
        }
        sat_count_.assign(clauses_.size(), 0);
        false_count_.assign(clauses_.size(), 0);
    }

    SolveResult run()
    {
        SolveResult out;
        for (const auto& c : clauses_)
            if (c.empty())
                return out;
        // initial units
        for (std::uint32_t i = 0; i < clauses_.size(); ++i)
            if (clauses_[i].size() == 1)
                pending_.push_back(clauses_[i][0]);
        std::vector<std::uint32_t> all(clauses_.size());
        for (std::uint32_t i = 0; i < all.size(); ++i)
            all[i] = i;
        if (!propagate() || !search(all))
            return out;

        out.verdict = Verdict::sat;
        for (std::size_t v = 0; v < vars_.size(); ++v)
            out.model.set(vars_[v], value_[v] == 1);
        if (!out.model.satisfies(formula_view()))
            throw std::logic_error("DPLL produced a model that does not satisfy the formula");
        return out;
    }

private:
    std::uint32_t code(Literal lit) const
    {
        const auto it = std::lower_bound(vars_.begin(), vars_.end(), lit.var());
        return static_cast<std::uint32_t>(it - vars_.begin()) * 2 + (lit.is_negative() ? 1 : 0);
    }

    Formula formula_view() const
    {
        std::vector<Clause> out;
        for (const auto& c : clauses_) {
            std::vector<Literal> lits;
            for (auto l : c)
                lits.emplace_back(vars_[l / 2], (l & 1) != 0);
            out.emplace_back(std::move(lits));
        }
        return Formula{std::move(out)};
    }

    int lit_value(std::uint32_t l) const
    {
        const auto v = value_[l / 2];
        if (v < 0)
            return -1;
        return (l & 1) ? 1 - v : v;
    }

    /// Makes literal l true. Returns false on conflict.
    bool assign(std::uint32_t l)
    {
        value_[l / 2] = (l & 1) ? 0 : 1;
        trail_.push_back(l);
        bool ok = true;
        for (auto ci : occurs_[l])
            ++sat_count_[ci];
        for (auto ci : occurs_[l ^ 1]) {
            const auto falses = ++false_count_[ci];
            if (sat_count_[ci] != 0)
                continue;
            const auto size = clauses_[ci].size();
            if (falses == size)
                ok = false;
            else if (falses + 1 == size)
                for (auto other : clauses_[ci])
                    if (lit_value(other) < 0) {
                        pending_.push_back(other);
                        break;
                    }
        }
        return ok;
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const auto l = trail_.back();
            trail_.pop_back();
            for (auto ci : occurs_[l])
                --sat_count_[ci];
            for (auto ci : occurs_[l ^ 1])
                --false_count_[ci];
            value_[l / 2] = -1;
        }
    }

    bool propagate()
    {
        while (!pending_.empty()) {
            const auto l = pending_.back();
            pending_.pop_back();
            const auto v = lit_value(l);
            if (v == 1)
                continue;
            if (v == 0 || !assign(l)) {
                pending_.clear();
                return false;
            }
        }
        return true;
    }

    /// Clauses of `scope` that are not yet satisfied.
    std::vector<std::uint32_t> open_clauses(const std::vector<std::uint32_t>& scope) const
    {
        std::vector<std::uint32_t> out;
        for (auto ci : scope)
            if (sat_count_[ci] == 0)
                out.push_back(ci);
        return out;
    }

    std::uint32_t find(std::uint32_t v) const
    {
        while (parent_[v] != v)
            v = parent_[v] = parent_[parent_[v]];
        return v;
    }

    /// Splits open clauses into groups that share no unassigned variable.
    std::vector<std::vector<std::uint32_t>> components(const std::vector<std::uint32_t>& open) const
    {
        for (auto ci : open)
            for (auto l : clauses_[ci])
                parent_[l / 2] = l / 2;
        for (auto ci : open) {
            std::int64_t first = -1;
            for (auto l : clauses_[ci]) {
                if (value_[l / 2] >= 0)
                    continue;
                const auto root = find(l / 2);
                if (first < 0)
                    first = root;
                else if (root != static_cast<std::uint32_t>(first))
                    parent_[root] = static_cast<std::uint32_t>(first);
            }
        }
        std::vector<std::vector<std::uint32_t>> out;
        for (auto ci : open) {
            std::uint32_t anchor = clauses_[ci][0] / 2;
            for (auto l : clauses_[ci])
                if (value_[l / 2] < 0) {
                    anchor = l / 2;
                    break;
                }
            const auto root = find(anchor);
            if (slot_stamp_[root] != stamp_) {
                slot_stamp_[root] = stamp_;
                slot_[root] = static_cast<std::int64_t>(out.size());
                out.emplace_back();
            }
            out[static_cast<std::size_t>(slot_[root])].push_back(ci);
        }
        ++stamp_;
        return out;
    }

    /// Unassigned variable of largest two-sided Jeroslow-Wang weight in
    /// `open`, or -1.
    std::int64_t pick(const std::vector<std::uint32_t>& open) const
    {
        std::int64_t best = -1;
        for (auto ci : open)
            for (auto l : clauses_[ci])
                score_[l / 2] = 0.0;
        for (auto ci : open) {
            const auto width = clauses_[ci].size() - false_count_[ci];
            const double w = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(width, 1000)));
            for (auto l : clauses_[ci])
                if (value_[l / 2] < 0)
                    score_[l / 2] += w;
        }
        for (auto ci : open)
            for (auto l : clauses_[ci]) {
                const auto v = l / 2;
                if (value_[v] < 0 && (best < 0 || score_[v] > score_[static_cast<std::size_t>(best)] ||
                                      (score_[v] == score_[static_cast<std::size_t>(best)] && v < best)))
                    best = static_cast<std::int64_t>(v);
            }
        return best;
    }

    /// Satisfies every clause of `scope` or reports that this is impossible
    /// under the current trail. On failure the caller undoes the trail.
    bool search(const std::vector<std::uint32_t>& scope)
    {
        const auto open = open_clauses(scope);
        if (open.empty())
            return true;
        auto parts = components(open);
        if (parts.size() > 1) {
            std::sort(parts.begin(), parts.end(),
                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
            for (const auto& part : parts)
                if (!search_component(part))
                    return false;
            return true;
        }
        return search_component(parts.front());
    }

    bool search_component(const std::vector<std::uint32_t>& open)
    {
        const auto v = pick(open);
        if (v < 0)
            return true;
        const auto var = static_cast<std::uint32_t>(v);
        for (std::uint32_t neg : {0U, 1U}) {
            const auto mark = trail_.size();
            pending_.push_back(2 * var + neg);
            if (propagate() && search(open))
                return true;
            undo_to(mark);
        }
        return false;
    }

    VariableSet vars_;
    std::vector<std::vector<std::uint32_t>> clauses_;
    std::vector<std::vector<std::uint32_t>> occurs_;
    std::vector<std::uint32_t> sat_count_;
    std::vector<std::uint32_t> false_count_;
    std::vector<int> value_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::uint32_t> pending_;
    mutable std::vector<double> score_ = std::vector<double>(vars_.size());
    mutable std::vector<std::uint32_t> parent_ = std::vector<std::uint32_t>(vars_.size());
    mutable std::vector<std::int64_t> slot_ = std::vector<std::int64_t>(vars_.size(), -1);
    mutable std::vector<std::uint64_t> slot_stamp_ = std::vector<std::uint64_t>(vars_.size(), 0);
    mutable std::uint64_t stamp_ = 1;
};

/// Clause as positive/negative bit masks over the first 64 variables.
struct MaskClause
{
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
};

std::vector<MaskClause> to_masks(const Formula& f, const VariableSet& vars)
{
    std::vector<MaskClause> out;
    out.reserve(f.size());
    for (const auto& c : f) {
        MaskClause m;
        for (auto lit : c) {
            const auto bit = std::uint64_t{1} << (std::lower_bound(vars.begin(), vars.end(), lit.var()) - vars.begin());
            (lit.is_negative() ? m.neg : m.pos) |= bit;
        }
        out.push_back(m);
    }
    return out;
}

void require_enumerable(const VariableSet& vars, std::size_t limit)
{
    limit = std::min(limit, hard_brute_limit);
    if (vars.size() > limit)
        throw limit_error("formula has " + std::to_string(vars.size()) + " variables; enumeration limit is " +
                          std::to_string(limit));
}

PartialAssignment decode(const VariableSet& vars, std::uint64_t bits)
{
    PartialAssignment out;
    for (std::size_t i = 0; i < vars.size(); ++i)
        out.set(vars[i], ((bits >> i) & 1) != 0);
    return out;
}

} // namespace

SolveResult solve(const Formula& f)
{
    return Dpll{f}.run();
}

SolveResult brute_force(const Formula& f, std::size_t limit)
{
    const auto vars = variables(f);
    require_enumerable(vars, limit);
    const auto masks = to_masks(f, vars);
    const std::uint64_t total = std::uint64_t{1} << vars.size();
    for (std::uint64_t a = 0; a < total; ++a) {
        const bool all = std::all_of(masks.begin(), masks.end(),
                                     [a](const MaskClause& m) { return ((a & m.pos) | (~a & m.neg)) != 0; });
        if (all)
            return {Verdict::sat, decode(vars, a)};
    }
    return {};
}

SolveResult check_sat(const Formula& f, Engine engine, std::size_t limit)
{
    return engine == Engine::dpll ? solve(f) : brute_force(f, limit);
}

MaxSatResult max_sat_exact(const Formula& f, std::size_t limit)
{
    const auto vars = variables(f);
    require_enumerable(vars, limit);
    const auto masks = to_masks(f, vars);
    const std::uint64_t total = std::uint64_t{1} << vars.size();
    std::size_t best = 0;
    std::uint64_t witness = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        std::size_t count = 0;
        for (const auto& m : masks)
            count += ((a & m.pos) | (~a & m.neg)) != 0 ? 1 : 0;
        if (count > best || a == 0) {
            best = count;
            witness = a;
        }
        if (best == masks.size())
            break;
    }
    return {best, decode(vars, witness)};
}

Formula with_clause_negated(const Formula& f, const Clause& c)
{
    std::vector<Clause> units;
    for (auto lit : c)
        units.push_back(Clause{~lit});
    return f.with(Formula{std::move(units)});
}

bool forcer_check(const Formula& f, const Clause& c, Engine engine, std::size_t limit)
{
    if (!check_sat(f, engine, limit).satisfiable())
        return false;
    return !check_sat(with_clause_negated(f, c), engine, limit).satisfiable();
}

} // namespace lcnf
