#pragma once

// JSON bindings for the report types. Integers serialize as decimal strings
// so arbitrary-precision values survive the round trip; nlohmann::json keeps
// object keys sorted, which makes every report byte-stable.

#include <json.hpp>

#include "x4q4/arith.hpp"
#include "x4q4/conditions.hpp"
#include "x4q4/cyclotomic.hpp"
#include "x4q4/diophantine.hpp"

namespace x4q4 {

using json = nlohmann::json;

json int_to_json(const arith::Int& v);
arith::Int int_from_json(const json& j);

} // namespace x4q4

namespace x4q4::cyclotomic {

void to_json(json& j, const SplittingReport& rep);
void from_json(const json& j, SplittingReport& rep);

void to_json(json& j, const SymbolValue& sym);
void from_json(const json& j, SymbolValue& sym);

} // namespace x4q4::cyclotomic

namespace x4q4::conditions {

void to_json(json& j, const ConditionReport& rep);
void from_json(const json& j, ConditionReport& rep);

} // namespace x4q4::conditions

namespace x4q4::diophantine {

void to_json(json& j, const SolutionRecord& rec);
void from_json(const json& j, SolutionRecord& rec);

void to_json(json& j, const TraceReport& tr);
void from_json(const json& j, TraceReport& tr);

} // namespace x4q4::diophantine
