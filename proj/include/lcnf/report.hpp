#pragma once

#include "lcnf/analysis.hpp"
#include "lcnf/bounds.hpp"
#include "lcnf/constructions.hpp"
#include "lcnf/dimacs.hpp"
#include "lcnf/reduction.hpp"
#include "lcnf/solver.hpp"

#include <json.hpp>

namespace lcnf {

/// Big integers and rationals are written as decimal strings ("p" or "p/q")
/// so no precision is lost.
nlohmann::json to_json(const Clause& c);
nlohmann::json to_json(const PartialAssignment& a);
nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const MaxSatResult& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const PeelReport& r);
nlohmann::json to_json(const FkBounds& b, const TowerSize& t);
nlohmann::json to_json(const SizingResult& s);
nlohmann::json to_json(const ReductionTrace& t, const Metadata& meta);

/// Inverse of to_json(ReductionTrace); metadata is ignored.
ReductionTrace trace_from_json(const nlohmann::json& j);

} // namespace lcnf
