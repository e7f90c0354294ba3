#pragma once

#include "lcnf/constructions.hpp"
#include "lcnf/formula.hpp"

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

namespace lcnf {

/// Linear 3-CNF with 15 clauses that is satisfiable exactly when y = 0:
/// F6(D2) + F8(D3) + {D1} for D1 = {-y,x,z}, D2 = {-y,x,-z}, D3 = {-y,-x}
/// with x, z and the gadget internals drawn from `pool`.
[[nodiscard]] Formula neg_forcer3(Variable y, VariablePool& pool);
[[nodiscard]] Formula neg_forcer3(Variable y);

enum class ForcerSource { builtin3, user_file, mu_extracted };

std::string_view to_string(ForcerSource s);

/// Supplies, for any fresh variable y, a linear k-CNF that forces y = 0 and
/// shares no variable other than y with anything else.
class ForcerProvider
{
public:
    /// neg_forcer3, for k = 3.
    static ForcerProvider builtin3();

    /// A ready-made forcer for `forced`. Must be linear and k-uniform; when
    /// `verify` is set its forcing property is checked with the solver.
    static ForcerProvider from_forcer(const Formula& forcer, Variable forced, std::size_t k, bool verify = true);

    /// Minimizes an unsatisfiable linear k-CNF to an MU core and drops the
    /// clauses containing the lowest variable that occurs positively.
    static ForcerProvider from_unsatisfiable(const Formula& g, std::size_t k);

    [[nodiscard]] std::size_t k() const { return k_; }
    [[nodiscard]] ForcerSource source() const { return source_; }
    [[nodiscard]] const Formula& pattern() const { return pattern_; }
    [[nodiscard]] Variable forced_variable() const { return forced_; }
    [[nodiscard]] std::size_t size() const { return pattern_.size(); }

    /// A copy of the forcer acting on `y`, with fresh internals from `pool`.
    [[nodiscard]] Formula instantiate(Variable y, VariablePool& pool) const;

private:
    ForcerProvider(std::size_t k, ForcerSource source, Formula pattern, Variable forced);

    std::size_t k_;
    ForcerSource source_;
    Formula pattern_;
    Variable forced_;
};

struct ForcerSpan
{
    Variable forced;
    /// Half-open clause range in the reduced formula's canonical order.
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct ReductionTrace
{
    std::size_t k = 0;
    /// Original variable -> its copies; the first copy reuses the original id.
    std::map<Variable, std::vector<Variable>> copy_map;
    /// One entry of k-2 padding variables per implication clause.
    std::vector<std::vector<Variable>> padding_vars;
    std::vector<ForcerSpan> forcer_spans;
    ForcerSource forcer_source = ForcerSource::builtin3;
    std::size_t forcer_size = 0;

    /// Model of the input formula read off the first copy of each variable.
    [[nodiscard]] PartialAssignment lift(const PartialAssignment& reduced_model) const;
    /// Every copy of every variable carries the same value.
    [[nodiscard]] bool copies_agree(const PartialAssignment& reduced_model) const;
};

struct Reduction
{
    Formula formula;
    ReductionTrace trace;
};

/// Compiles a k-CNF (k >= 3) into an equisatisfiable linear k-CNF.
///
/// Each occurrence of a repeated variable gets its own copy; copies are tied
/// by an implication cycle whose clauses are padded to width k with fresh
/// variables, each forced to 0 by a forcer from `provider`. A variable with
/// exactly two occurrences gets a third copy used only in the cycle, since a
/// two-clause cycle would share two variables.
[[nodiscard]] Reduction reduce_to_linear(const Formula& f, std::size_t k, const ForcerProvider& provider);

/// Deletion-based minimal unsatisfiable subformula: clauses are visited in
/// canonical order and dropped whenever the rest stays unsatisfiable.
/// Throws std::invalid_argument if `f` is satisfiable.
[[nodiscard]] Formula minimize_unsat(const Formula& f);

} // namespace lcnf
