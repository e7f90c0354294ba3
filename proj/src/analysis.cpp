#include "lcnf/analysis.hpp"

#include <algorithm>
#include <unordered_map>

namespace lcnf {

std::string_view to_string(CertificateVerdict v)
{
    switch (v) {
    case CertificateVerdict::certified_satisfiable:
        return "certified-satisfiable";
    case CertificateVerdict::not_applicable:
        return "not-applicable";
    case CertificateVerdict::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

std::string_view to_string(PeelStatus s)
{
    return s == PeelStatus::lll_satisfiable ? "LLL-satisfiable" : "level-exhausted";
}

namespace {

/// For each clause, the indices of its neighbors (sorted).
std::vector<std::vector<std::size_t>> neighbor_lists(const Formula& f)
{
    std::unordered_map<std::uint32_t, std::vector<std::size_t>> occurs;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (auto lit : f[i])
            occurs[lit.var().id()].push_back(i);

    std::vector<std::vector<std::size_t>> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto& list = out[i];
        for (auto lit : f[i])
            for (auto j : occurs[lit.var().id()])
                if (j != i)
                    list.push_back(j);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return out;
}

std::vector<rational> weights_from(const Formula& f, const std::vector<std::vector<std::size_t>>& neighbors)
{
    const auto top = max_clause_size(f);
    std::vector<rational> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        big_int num = 0; // in units of 2^-top
        for (auto j : neighbors[i])
            num += big_int{1} << (top - f[j].size());
        out.emplace_back(num, big_int{1} << top);
    }
    return out;
}

const rational quarter{1, 4};

} // namespace

std::vector<rational> neighborhood_weights(const Formula& f)
{
    return weights_from(f, neighbor_lists(f));
}

Certificate lll_certificate(const Formula& f)
{
    Certificate cert;
    cert.weights = neighborhood_weights(f);
    if (std::any_of(f.begin(), f.end(), [](const Clause& c) { return c.size() <= 1; })) {
        cert.verdict = CertificateVerdict::not_applicable;
        return cert;
    }
    std::optional<std::size_t> heaviest;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (cert.weights[i] > quarter && (!heaviest || cert.weights[i] > cert.weights[*heaviest]))
            heaviest = i;
    if (!heaviest) {
        cert.verdict = CertificateVerdict::certified_satisfiable;
        return cert;
    }
    cert.verdict = CertificateVerdict::inconclusive;
    cert.witness_clause = f[*heaviest];
    return cert;
}

PeelReport peel(const Formula& f, std::size_t k)
{
    if (!is_linear(f))
        throw formula_error("peeling requires a linear formula");
    if (k < 2 || !is_lk(f, 2, k))
        throw formula_error("peeling requires a [2," + std::to_string(k) + "]-CNF");

    PeelReport report;
    report.k = k;
    report.initial_level = f.empty() ? k : min_clause_size(f);
    report.residual = f;

    for (std::size_t level = report.initial_level;; --level) {
        const Formula& current = report.residual;
        const auto neighbors = neighbor_lists(current);
        const auto weights = weights_from(current, neighbors);

        std::optional<std::size_t> chosen;
        for (std::size_t i = 0; i < current.size(); ++i)
            if (weights[i] > quarter && (!chosen || weights[i] > weights[*chosen]))
                chosen = i;
        if (!chosen) {
            report.status = PeelStatus::lll_satisfiable;
            break;
        }
        if (level < 2) {
            report.status = PeelStatus::level_exhausted;
            break;
        }

        const Clause& clause = current[*chosen];
        PeelRound round;
        round.level = level;
        round.clause = clause;
        round.weight = weights[*chosen];
        round.neighborhood_size = neighbors[*chosen].size();

        // Gamma_x(C) for each x in vbl(C); disjoint because the formula is linear.
        std::vector<std::vector<std::size_t>> by_var(clause.size());
        for (auto j : neighbors[*chosen])
            for (std::size_t t = 0; t < clause.size(); ++t)
                if (current[j].mentions(clause[t].var()))
                    by_var[t].push_back(j);

        std::size_t pivot = 0;
        for (std::size_t t = 1; t < clause.size(); ++t)
            if (by_var[t].size() < by_var[pivot].size())
                pivot = t; // literal order is variable order, so ties keep the lowest id
        round.pivot = clause[pivot].var();
        round.assignment.set(clause[pivot].var(), clause[pivot].is_positive());
        for (std::size_t t = 0; t < clause.size(); ++t) {
            if (t == pivot)
                continue;
            const auto x = clause[t].var();
            std::size_t positive = 0, negative = 0;
            for (auto j : by_var[t])
                (current[j].literal_of(x)->is_positive() ? positive : negative)++;
            round.assignment.set(x, positive >= negative);
        }

        round.satisfied = round.assignment.count_satisfied(current);
        const rational share{static_cast<long long>(level - 1), static_cast<long long>(2 * level)};
        round.guarantee = static_cast<std::size_t>(ceil(share * round.neighborhood_size));
        round.degree_before = degrees(current, k).max;

        Formula next = apply(current, round.assignment);
        round.degree_after = degrees(next, k).max;
        report.rounds.push_back(std::move(round));
        report.residual = std::move(next);
    }
    return report;
}

} // namespace lcnf
