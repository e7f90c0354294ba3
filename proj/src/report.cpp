#include "lcnf/report.hpp"

namespace lcnf {

using nlohmann::json;

json to_json(const Clause& c)
{
    json out = json::array();
    for (auto lit : c)
        out.push_back(lit.to_dimacs());
    return out;
}

json to_json(const PartialAssignment& a)
{
    json out = json::object();
    for (auto [v, value] : a.values())
        out[std::to_string(v.id())] = value ? 1 : 0;
    return out;
}

json to_json(const SolveResult& r)
{
    json out{{"verdict", std::string{to_string(r.verdict)}}};
    if (r.satisfiable())
        out["model"] = to_json(r.model);
    return out;
}

json to_json(const MaxSatResult& r)
{
    return {{"satisfied", r.satisfied}, {"assignment", to_json(r.assignment)}};
}

json to_json(const Certificate& c)
{
    json weights = json::array();
    for (const auto& w : c.weights)
        weights.push_back(to_string(w));
    json out{{"verdict", std::string{to_string(c.verdict)}}, {"weights", weights}};
    out["witness_clause"] = c.witness_clause ? to_json(*c.witness_clause) : json(nullptr);
    return out;
}

json to_json(const PeelReport& r)
{
    json rounds = json::array();
    for (const auto& round : r.rounds)
        rounds.push_back({
            {"level", round.level},
            {"clause", to_json(round.clause)},
            {"weight", to_string(round.weight)},
            {"neighborhood_size", round.neighborhood_size},
            {"pivot", round.pivot.id()},
            {"assignment", to_json(round.assignment)},
            {"satisfied", round.satisfied},
            {"guarantee", round.guarantee},
            {"degree_before", round.degree_before},
            {"degree_after", round.degree_after},
        });
    return {
        {"k", r.k},
        {"initial_level", r.initial_level},
        {"status", std::string{to_string(r.status)}},
        {"rounds", rounds},
        {"residual_clauses", r.residual.size()},
        {"residual_has_empty_clause", r.residual.has_empty_clause()},
    };
}

json to_json(const FkBounds& b, const TowerSize& t)
{
    return {
        {"k", b.k},
        {"lower", b.lower.str()},
        {"lower_peel_j", b.lower_peel_j ? json(*b.lower_peel_j) : json(nullptr)},
        {"upper", b.upper.str()},
        {"t_k", t.text},
    };
}

json to_json(const SizingResult& s)
{
    json out{{"k", s.k}, {"n", s.n}, {"m", s.m}};
    out["delta"] = s.delta ? json(to_string(*s.delta)) : json(nullptr);
    return out;
}

json to_json(const ReductionTrace& t, const Metadata& meta)
{
    json copy_map = json::object();
    for (const auto& [x, copies] : t.copy_map) {
        json ids = json::array();
        for (auto c : copies)
            ids.push_back(c.id());
        copy_map[std::to_string(x.id())] = ids;
    }
    json padding = json::array();
    for (const auto& pads : t.padding_vars) {
        json ids = json::array();
        for (auto p : pads)
            ids.push_back(p.id());
        padding.push_back(ids);
    }
    json spans = json::array();
    for (const auto& s : t.forcer_spans)
        spans.push_back({{"forced", s.forced.id()}, {"begin", s.begin}, {"end", s.end}});
    json generator = json::object();
    for (const auto& [key, value] : meta)
        generator[key] = value;
    return {
        {"k", t.k},
        {"copy_map", copy_map},
        {"padding_vars", padding},
        {"forcer_spans", spans},
        {"forcer_source", std::string{to_string(t.forcer_source)}},
        {"forcer_size", t.forcer_size},
        {"generator", generator},
    };
}

ReductionTrace trace_from_json(const json& j)
{
    ReductionTrace t;
    t.k = j.at("k").get<std::size_t>();
    for (const auto& [key, ids] : j.at("copy_map").items()) {
        auto& copies = t.copy_map[Variable{static_cast<std::uint32_t>(std::stoul(key))}];
        for (const auto& id : ids)
            copies.emplace_back(id.get<std::uint32_t>());
    }
    for (const auto& ids : j.at("padding_vars")) {
        auto& pads = t.padding_vars.emplace_back();
        for (const auto& id : ids)
            pads.emplace_back(id.get<std::uint32_t>());
    }
    for (const auto& s : j.at("forcer_spans"))
        t.forcer_spans.push_back(
            {Variable{s.at("forced").get<std::uint32_t>()}, s.at("begin").get<std::size_t>(), s.at("end").get<std::size_t>()});
    const auto source = j.at("forcer_source").get<std::string>();
    t.forcer_source = source == "builtin-3" ? ForcerSource::builtin3
                      : source == "user-file" ? ForcerSource::user_file
                                              : ForcerSource::mu_extracted;
    t.forcer_size = j.at("forcer_size").get<std::size_t>();
    return t;
}

} // namespace lcnf
