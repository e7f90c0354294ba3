#pragma once

#include "lcnf/formula.hpp"
#include "lcnf/numeric.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace lcnf {

enum class CertificateVerdict { certified_satisfiable, not_applicable, inconclusive };

std::string_view to_string(CertificateVerdict v);

/// Outcome of the Local Lemma test: a CNF without clauses of size <= 1 is
/// satisfiable if every clause C has sum_{D in Gamma(C)} 2^-|D| <= 1/4.
struct Certificate
{
    CertificateVerdict verdict = CertificateVerdict::not_applicable;
    /// A clause of maximal weight, when the verdict is inconclusive.
    std::optional<Clause> witness_clause;
    /// Neighborhood weight of each clause, in the formula's canonical order.
    std::vector<rational> weights;
};

[[nodiscard]] Certificate lll_certificate(const Formula& f);

/// sum_{D in Gamma(C)} 2^-|D| for every clause, in canonical order.
[[nodiscard]] std::vector<rational> neighborhood_weights(const Formula& f);

struct PeelRound
{
    /// Lower clause-size bound l of the formula this round started from.
    std::size_t level = 0;
    Clause clause;
    rational weight;
    std::size_t neighborhood_size = 0;
    Variable pivot;
    PartialAssignment assignment;
    /// Clauses of the round's input formula satisfied by `assignment`.
    std::size_t satisfied = 0;
    /// ceil((l-1)/(2l) * |Gamma(C)|).
    std::size_t guarantee = 0;
    std::size_t degree_before = 0;
    std::size_t degree_after = 0;
};

enum class PeelStatus {
    /// No clause exceeds the 1/4 threshold any more.
    lll_satisfiable,
    /// The next round would need l < 2.
    level_exhausted,
};

std::string_view to_string(PeelStatus s);

struct PeelReport
{
    std::size_t k = 0;
    std::size_t initial_level = 0;
    std::vector<PeelRound> rounds;
    Formula residual;
    PeelStatus status = PeelStatus::lll_satisfiable;
};

/// Repeatedly satisfies a heaviest clause together with at least a
/// (l-1)/(2l) share of its neighborhood, shrinking the formula from an
/// [l,k]-CNF to an [l-1,k]-CNF each round.
///
/// Requires a linear formula whose clause sizes lie in [2, k]; throws
/// formula_error otherwise.
[[nodiscard]] PeelReport peel(const Formula& f, std::size_t k);

} // namespace lcnf
