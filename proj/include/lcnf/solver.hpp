#pragma once

#include "lcnf/formula.hpp"

#include <cstddef>
#include <string_view>

namespace lcnf {

enum class Verdict { sat, unsat };

std::string_view to_string(Verdict v);

struct SolveResult
{
    Verdict verdict = Verdict::unsat;
    /// Total over vbl(F) when satisfiable, empty otherwise.
    PartialAssignment model;

    [[nodiscard]] bool satisfiable() const { return verdict == Verdict::sat; }
};

struct MaxSatResult
{
    std::size_t satisfied = 0;
    PartialAssignment assignment;
};

enum class Engine { dpll, brute_force };

/// Enumeration ceiling for brute_force and max_sat_exact.
inline constexpr std::size_t default_brute_limit = 24;
inline constexpr std::size_t hard_brute_limit = 62;

/// DPLL with unit propagation. Branches on the variable with the largest
/// Jeroslow-Wang weight over open clauses, trying 1 before 0.
[[nodiscard]] SolveResult solve(const Formula& f);

/// Exhaustive enumeration in binary order over vbl(F) sorted by id.
/// Throws limit_error when |vbl(F)| exceeds `limit`.
[[nodiscard]] SolveResult brute_force(const Formula& f, std::size_t limit = default_brute_limit);

[[nodiscard]] SolveResult check_sat(const Formula& f, Engine engine, std::size_t limit = default_brute_limit);

/// Maximum number of simultaneously satisfiable clauses, by enumeration.
[[nodiscard]] MaxSatResult max_sat_exact(const Formula& f, std::size_t limit = default_brute_limit);

/// `f` is satisfiable and every model of `f` satisfies `c`.
[[nodiscard]] bool forcer_check(const Formula& f, const Clause& c, Engine engine = Engine::dpll,
                                std::size_t limit = default_brute_limit);

/// `f` together with the unit clause {~l} for every literal l of `c`.
[[nodiscard]] Formula with_clause_negated(const Formula& f, const Clause& c);

} // namespace lcnf
