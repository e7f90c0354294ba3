#pragma once

#include "lcnf/formula.hpp"
#include "lcnf/numeric.hpp"
#include "lcnf/set_systems.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lcnf {

/// Hands out fresh variables in increasing id order.
class VariablePool
{
    std::uint32_t next_;

public:
    explicit VariablePool(std::uint32_t first = 1);

    Variable fresh();
    std::vector<Variable> fresh(std::size_t count);
    /// The id the next call to fresh() will return.
    [[nodiscard]] std::uint32_t peek() const { return next_; }
};

/// F (x) D: clause i of `f` (canonical order) extended by literal i of `d`.
/// Requires |d| = |f| and disjoint variables.
[[nodiscard]] Formula otimes(const Formula& f, const Clause& d);

struct TowerSize
{
    std::size_t k = 0;
    /// Present while t(k) is small enough to write out (k <= 4).
    std::optional<big_int> exact;
    /// Human-readable form; the decimal value when exact.
    std::string text;
};

[[nodiscard]] TowerSize tower_size(std::size_t k);

struct TowerOptions
{
    std::size_t max_k = 3;
};

/// Unsatisfiable linear k-CNF with t(k) clauses, built by induction:
/// tower(0) = {{}}; tower(k+1) attaches every sign pattern over t(k) fresh
/// pattern variables to its own variable-disjoint copy of tower(k).
/// Pattern variables take the lowest ids. Throws limit_error above max_k.
[[nodiscard]] Formula tower(std::size_t k, const TowerOptions& options = {});

/// Deterministic seed for sign selection.
struct SigningSeed
{
    std::uint64_t value = 0;
};

/// Identifier of the counter-based generator used by random_signing.
inline constexpr std::string_view signing_algorithm = "splitmix64-ctr/v1";

/// Word `counter` of the signing stream for `seed`.
[[nodiscard]] std::uint64_t signing_word(std::uint64_t seed, std::uint64_t counter);

/// One clause per set of a linear system, over variables 1..n, with every
/// literal's sign drawn from the seeded stream. Throws std::invalid_argument
/// for a non-linear system.
[[nodiscard]] Formula random_signing(const KSetSystem& s, SigningSeed seed);

enum class SystemProvider { lines, greedy, pairs };

std::string_view to_string(SystemProvider p);
[[nodiscard]] SystemProvider parse_provider(std::string_view name);

struct SizingResult
{
    std::size_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::optional<rational> delta;
};

/// Guaranteed size of a linear k-set system over n elements from `provider`
/// (0 if the provider has nothing at this n).
[[nodiscard]] big_int provider_capacity(SystemProvider provider, std::uint64_t n, std::uint64_t k);

/// Smallest n whose provider system has at least m = ceil(2^k n ln 2) sets.
/// Throws std::invalid_argument when no n qualifies (k = 1, or a provider
/// that cannot supply k-sets).
[[nodiscard]] SizingResult sizing_unsat(std::size_t k, SystemProvider provider);

/// n = smallest integer above k^4 2^k ln2 / delta^2 and
/// m = ceil(2^(k+1) n ln2 / delta^2) + 1. Requires 0 < delta <= 1.
[[nodiscard]] SizingResult sizing_partial(std::size_t k, const rational& delta);

/// The plain unsatisfiable 2-CNF F6 over variables 1..4: the implication
/// cycle 1 -> 2 -> 3 -> 4 -> 1 plus {1,3} and {-2,-4}.
[[nodiscard]] Formula f6_core();

/// |c| = 3: six-clause F6(c); |c| = 2: eight-clause F8(c). The result is a
/// satisfiable linear 3-CNF whose models all satisfy c. Internal variables
/// come from `pool`, which must lie above every variable of c.
[[nodiscard]] Formula forcer3(const Clause& c, VariablePool& pool);
/// As above, with internals numbered right after c's largest variable.
[[nodiscard]] Formula forcer3(const Clause& c);

/// The unsatisfiable linear 3-CNFs with 48, 32, 31 and 30 clauses.
[[nodiscard]] Formula family3(int variant);

struct MuCheckOptions
{
    bool verify = true;
    /// Minimality is checked only up to this many clauses.
    std::size_t max_clauses = 512;
};

/// Drops every clause containing the positive literal y from a minimally
/// unsatisfiable linear formula. What remains is satisfiable and forces y = 0.
[[nodiscard]] Formula forcer_from_mu(const Formula& g, Variable y, const MuCheckOptions& options = {});

/// Every clause removal leaves a satisfiable formula, and `g` itself is
/// unsatisfiable.
[[nodiscard]] bool is_minimally_unsatisfiable(const Formula& g);

} // namespace lcnf
